#include <doctest.h>

#include <random>
#include <vector>

#include "sfield/scalar.hpp"

using namespace sfield;

namespace {

// Independent oracle: find the inverse of a mod p by scanning all residues.
std::int64_t brute_inverse(std::int64_t a, std::int64_t p) {
    for (std::int64_t b = 0; b < p; ++b) {
        if ((a * b) % p == 1) return b;
    }
    return -1;
}

Scalar random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-30, 30);
    std::uniform_int_distribution<long long> den(1, 12);
    return Scalar::rational(num(rng), den(rng));
}

} // namespace

TEST_CASE("rational normalization") {
    CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
    CHECK(Scalar::rational(-2, 4) == Scalar::rational(1, -2));
    CHECK(Scalar::rational(1, -2).den() == 1 * 2);
    CHECK(Scalar::rational(1, -2).num() == -1);
    CHECK(Scalar::rational(0, 7) == Scalar::rational(0));
    CHECK_THROWS_AS(Scalar::rational(1, 0), ConstructionError);

    // normalizing a normalized value changes nothing
    Scalar a = Scalar::rational(-6, 9);
    CHECK(Scalar::rational(a.num(), a.den()) == a);
    CHECK(a.str() == "-2/3");
    CHECK(Scalar::rational(3, 1).str() == "3");
}

TEST_CASE("rational arithmetic") {
    CHECK(Scalar::rational(1, 2) + Scalar::rational(1, 3) == Scalar::rational(5, 6));
    CHECK(Scalar::rational(2, 3) * Scalar::rational(3, 4) == Scalar::rational(1, 2));
    CHECK(-Scalar::rational(1, 2) == Scalar::rational(-1, 2));
    CHECK(-Scalar::rational(0) == Scalar::rational(0));
    CHECK(Scalar::rational(2, 3).inverse() == Scalar::rational(3, 2));
    CHECK(Scalar::rational(1).inverse() == Scalar::rational(1));
    CHECK_THROWS_AS(Scalar::rational(0).inverse(), NotInvertible);

    Scalar a = Scalar::rational(-7, 5);
    CHECK(Scalar::rational(0) + a == a);
    CHECK(Scalar::rational(1) * a == a);
    CHECK(a + (-a) == Scalar::rational(0));
}

TEST_CASE("prime field arithmetic") {
    CHECK(Scalar::gf(3, 5) + Scalar::gf(4, 5) == Scalar::gf(2, 5));
    CHECK(Scalar::gf(3, 5) * Scalar::gf(4, 5) == Scalar::gf(2, 5));
    CHECK(-Scalar::gf(3, 5) == Scalar::gf(2, 5));
    CHECK(Scalar::gf(3, 5).inverse() == Scalar::gf(2, 5));
    CHECK(Scalar::gf(7, 5) == Scalar::gf(2, 5)); // construction reduces mod p
    CHECK(Scalar::gf(-1, 5) == Scalar::gf(4, 5));
    CHECK(Scalar::gf(2, 5).str() == "2");
}

TEST_CASE("prime field inverses against the brute-scan oracle") {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        for (std::int64_t a = 1; a < p; ++a) {
            CAPTURE(p);
            CAPTURE(a);
            CHECK(Scalar::gf(a, p).inverse() == Scalar::gf(brute_inverse(a, p), p));
        }
        CHECK_THROWS_AS(Scalar::gf(0, p).inverse(), NotInvertible);
    }
}

TEST_CASE("integer backend is a ring, not a field") {
    CHECK(Scalar::integer(2) + Scalar::integer(3) == Scalar::integer(5));
    CHECK(Scalar::integer(-4) * Scalar::integer(3) == Scalar::integer(-12));
    CHECK(Scalar::integer(1).inverse() == Scalar::integer(1));
    CHECK(Scalar::integer(-1).inverse() == Scalar::integer(-1));
    CHECK_THROWS_AS(Scalar::integer(2).inverse(), NotInvertible);
    CHECK_THROWS_AS(Scalar::integer(0).inverse(), NotInvertible);
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(Context::gf(4), ConstructionError);
    CHECK_THROWS_AS(Context::gf(1), ConstructionError);
    CHECK_THROWS_AS(Context::gf(0), ConstructionError);
    CHECK_THROWS_AS(Context::gf(91), ConstructionError); // 7 * 13
    CHECK(Context::gf(2147483647).modulus() == 2147483647);
    CHECK_THROWS_AS(Context::gf(2147483659), ConstructionError); // above 2^31
}

TEST_CASE("no mixing across backends or moduli") {
    CHECK_THROWS_AS(Scalar::rational(1) + Scalar::integer(1), BackendMismatch);
    CHECK_THROWS_AS(Scalar::gf(1, 3) + Scalar::gf(1, 5), BackendMismatch);
    CHECK_THROWS_AS(Scalar::gf(1, 3) * Scalar::rational(1), BackendMismatch);
    CHECK(Scalar::rational(1) != Scalar::integer(1));
    CHECK(Scalar::gf(2, 3) != Scalar::gf(2, 5));
}

TEST_CASE("fraction literals interpreted per backend") {
    CHECK(Scalar::from_fraction(7, 3, Context::gf(5)) == Scalar::gf(4, 5));
    CHECK_THROWS_AS(Scalar::from_fraction(1, 5, Context::gf(5)), NotInvertible);
    CHECK(Scalar::from_fraction(4, 2, Context::integers()) == Scalar::integer(2));
    CHECK_THROWS_AS(Scalar::from_fraction(3, 2, Context::integers()), NotInvertible);
    CHECK(Scalar::from_fraction(3, 2, Context::rationals()) == Scalar::rational(3, 2));
    CHECK(Scalar::from_integer(7, Context::gf(5)) == Scalar::gf(2, 5));
}

TEST_CASE("ring laws hold on random rationals") {
    std::mt19937_64 rng(0x5f1e1d);
    Scalar zero = Scalar::rational(0);
    Scalar one = Scalar::rational(1);
    for (int i = 0; i < 500; ++i) {
        Scalar a = random_rational(rng);
        Scalar b = random_rational(rng);
        Scalar c = random_rational(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK(a + (-a) == zero);
        if (!a.is_zero()) CHECK(a * a.inverse() == one);
    }
}

TEST_CASE("ring laws hold exhaustively on GF(3)") {
    std::vector<Scalar> all;
    for (int r = 0; r < 3; ++r) all.push_back(Scalar::gf(r, 3));
    for (const Scalar& a : all) {
        for (const Scalar& b : all) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            for (const Scalar& c : all) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
        CHECK(a + Scalar::gf(0, 3) == a);
        CHECK(a * Scalar::gf(1, 3) == a);
        CHECK(a + (-a) == Scalar::gf(0, 3));
    }
}
