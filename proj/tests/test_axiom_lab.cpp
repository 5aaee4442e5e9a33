#include <doctest.h>

#include <map>
#include <string>

#include <json.hpp>

#include "sfield/axiom_lab.hpp"

using namespace sfield;

namespace {

std::map<std::string, CheckResult> by_name(const AxiomReport& rep) {
    std::map<std::string, CheckResult> out;
    for (const CheckResult& c : rep.checks) out[c.name] = c;
    return out;
}

} // namespace

TEST_CASE("finite instance enumeration") {
    FiniteInstance inst = FiniteInstance::make(3);
    REQUIRE(inst.elements.size() == 9);
    // row-major: x outer, y inner
    CHECK(inst.elements[0] == SElement(Scalar::gf(0, 3), Scalar::gf(0, 3)));
    CHECK(inst.elements[1] == SElement(Scalar::gf(0, 3), Scalar::gf(1, 3)));
    CHECK(inst.elements[3] == SElement(Scalar::gf(1, 3), Scalar::gf(0, 3)));
    CHECK(inst.elements[8] == SElement(Scalar::gf(2, 3), Scalar::gf(2, 3)));

    CHECK_THROWS_AS(FiniteInstance::make(4), ConstructionError);
    CHECK_THROWS_AS(FiniteInstance::make(1), ConstructionError);
}

TEST_CASE("lambda covers every index") {
    LambdaSet lambda = lambda_set(FiniteInstance::make(5));
    REQUIRE(lambda.indices.size() == 5);
    for (std::int64_t r = 0; r < 5; ++r) {
        CHECK(lambda.indices[static_cast<std::size_t>(r)] == Scalar::gf(r, 5));
    }
}

TEST_CASE("full suite passes on small primes") {
    for (std::int64_t p : {2, 3, 5, 7}) {
        CAPTURE(p);
        AxiomReport rep = run_full_suite(p);
        CHECK(rep.all_passed());
        CHECK(rep.checks.size() == 52);
    }
}

TEST_CASE("advertised enumeration counts") {
    auto gf2 = by_name(run_full_suite(2));
    CHECK(gf2["add-commutative"].cases == 16); // (p^2)^2
    CHECK(gf2["add-associative"].cases == 64); // (p^2)^3
    CHECK(gf2["wheel-distributive"].cases == 64);
    CHECK(gf2["s-associative"].cases == 16); // p * p * p^2

    auto gf3 = by_name(run_full_suite(3));
    CHECK(gf3["wheel-distributive"].cases == 729);
    CHECK(gf3["s-associative"].cases == 81);
    CHECK(gf3["division-satisfies-definition"].cases == 18); // 9 * 2
    CHECK(gf3["unity-unique"].cases == 9);
    CHECK(gf3["embed-add-homomorphism"].cases == 9);
    CHECK(gf3["complete-regular"].cases == 3);

    auto gf5 = by_name(run_full_suite(5));
    CHECK(gf5["wheel-distributive"].cases == 15625);
    CHECK(gf5["s-associative"].cases == 625);
    CHECK(gf5["add-commutative"].cases == 625);
}

TEST_CASE("canonical witnesses") {
    FiniteInstance inst = FiniteInstance::make(3);
    auto structure = by_name(check_s_structure(inst));
    CHECK(structure["zero-product-nonzero"].verdict == Verdict::witnessed);
    CHECK(structure["zero-product-nonzero"].witness.at(0) ==
          SElement(Scalar::gf(0, 3), Scalar::gf(1, 3)));

    auto negatives = by_name(check_negative_theorems(inst));
    const CheckResult& dist = negatives["not-distributive"];
    REQUIRE(dist.verdict == Verdict::witnessed);
    // first element in enumeration order whose double product differs
    CHECK(dist.witness.at(0) == SElement(Scalar::gf(0, 3), Scalar::gf(1, 3)));
    const SElement zero = SElement::zero(inst.context());
    const SElement& w = dist.witness.at(0);
    CHECK((zero + zero) * w != (zero * w) + (zero * w));

    const CheckResult& assoc = negatives["not-associative"];
    REQUIRE(assoc.verdict == Verdict::witnessed);
    REQUIRE(assoc.witness.size() == 3);
    const SElement& a = assoc.witness[0];
    const SElement& b = assoc.witness[1];
    const SElement& c = assoc.witness[2];
    CHECK((a * b) * c != a * (b * c));
}

TEST_CASE("division table over GF(5)") {
    auto checks = by_name(check_division_theorems(FiniteInstance::make(5)));
    CHECK(checks["div-zero-defining-property"].cases == 4);
    CHECK(checks["div-zero-injective"].cases == 12); // ordered pairs, a != b
    CHECK(checks["zero-over-zero-indeterminate"].verdict == Verdict::pass);
    CHECK(checks["nonscalar-by-zero-no-solution"].cases == 20);
}

TEST_CASE("reports are deterministic") {
    AxiomReport first = run_full_suite(3);
    AxiomReport second = run_full_suite(3);
    CHECK(first.table() == second.table());
    CHECK(first.json() == second.json());
}

TEST_CASE("report serialization") {
    AxiomReport rep = run_full_suite(2);
    nlohmann::json doc = nlohmann::json::parse(rep.json());
    CHECK(doc["all_passed"] == true);
    REQUIRE(doc["checks"].is_array());
    CHECK(doc["checks"].size() == 52);
    bool saw_witness = false;
    for (const auto& entry : doc["checks"]) {
        CHECK(entry["cases"].is_number_unsigned());
        if (entry["name"] == "not-distributive") {
            saw_witness = true;
            // coordinates serialized as decimal strings
            CHECK(entry["witness"][0][0].is_string());
            CHECK(entry["witness"][0] == nlohmann::json({"0", "1"}));
        }
    }
    CHECK(saw_witness);

    std::string table = rep.table();
    CHECK(table.find("wheel-distributive") != std::string::npos);
    CHECK(table.find("witnessed") != std::string::npos);
}

TEST_CASE("suite bounds") {
    CHECK_THROWS_AS(run_full_suite(4), ConstructionError);
    CHECK_THROWS_AS(run_full_suite(17), ConstructionError);
    CHECK_THROWS_AS(run_full_suite(0), ConstructionError);
}
