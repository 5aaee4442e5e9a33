#include "sfield/axiom_lab.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace sfield {

namespace {

// Accumulates one universally quantified law: counts every case, keeps the
// first counterexample.  Witness elements are only copied on failure, so the
// hot (p^2)^3 loops pay nothing for them.
class Law {
public:
    explicit Law(std::string name) { result_.name = std::move(name); }

    template <typename... Witness>
    void require(bool ok, const Witness&... witness) {
        ++result_.cases;
        if (!ok && result_.verdict == Verdict::pass) {
            result_.verdict = Verdict::fail;
            (result_.witness.push_back(witness), ...);
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

std::int64_t residue(const Scalar& s) {
    return s.num().convert_to<std::int64_t>();
}

// Position of e in the row-major enumeration.
std::size_t enum_index(const FiniteInstance& inst, const SElement& e) {
    return static_cast<std::size_t>(residue(e.x()) * inst.modulus + residue(e.y()));
}

std::vector<Scalar> all_residues(const FiniteInstance& inst) {
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(inst.modulus));
    for (std::int64_t r = 0; r < inst.modulus; ++r) {
        out.push_back(Scalar::gf(r, inst.modulus));
    }
    return out;
}

} // namespace

FiniteInstance FiniteInstance::make(std::int64_t p) {
    (void)Context::gf(p); // validates primality and range
    FiniteInstance inst{p, {}};
    inst.elements.reserve(static_cast<std::size_t>(p * p));
    for (std::int64_t x = 0; x < p; ++x) {
        for (std::int64_t y = 0; y < p; ++y) {
            inst.elements.emplace_back(Scalar::gf(x, p), Scalar::gf(y, p));
        }
    }
    if (inst.elements.size() != static_cast<std::size_t>(p) * static_cast<std::size_t>(p)) {
        throw ConstructionError("instance has wrong cardinality");
    }
    for (std::size_t i = 0; i < inst.elements.size(); ++i) {
        if (enum_index(inst, inst.elements[i]) != i) {
            throw ConstructionError("instance enumeration has duplicates");
        }
    }
    // Spot-check closure on a leading block of pairs.
    std::size_t sample = std::min<std::size_t>(inst.elements.size(), 8);
    for (std::size_t i = 0; i < sample; ++i) {
        for (std::size_t j = 0; j < sample; ++j) {
            const SElement sum = inst.elements[i] + inst.elements[j];
            const SElement prod = inst.elements[i] * inst.elements[j];
            if (inst.elements[enum_index(inst, sum)] != sum ||
                inst.elements[enum_index(inst, prod)] != prod) {
                throw ConstructionError("instance is not closed under + and *");
            }
        }
    }
    return inst;
}

LambdaSet lambda_set(const FiniteInstance& inst) {
    std::vector<bool> seen(static_cast<std::size_t>(inst.modulus), false);
    for (const SElement& s : inst.elements) {
        seen[static_cast<std::size_t>(residue(s.alpha_index()))] = true;
    }
    LambdaSet out;
    for (std::int64_t r = 0; r < inst.modulus; ++r) {
        if (seen[static_cast<std::size_t>(r)]) {
            out.indices.push_back(Scalar::gf(r, inst.modulus));
        }
    }
    return out;
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::witnessed: return "witnessed";
    }
    return "?";
}

bool AxiomReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.verdict == Verdict::fail; });
}

std::string AxiomReport::table() const {
    std::size_t name_width = 5;
    for (const CheckResult& c : checks) name_width = std::max(name_width, c.name.size());

    std::ostringstream os;
    os << "check";
    os << std::string(name_width - 5, ' ') << "  verdict    cases      witness\n";
    for (const CheckResult& c : checks) {
        os << c.name << std::string(name_width - c.name.size(), ' ');
        std::string verdict = to_string(c.verdict);
        os << "  " << verdict << std::string(9 > verdict.size() ? 9 - verdict.size() : 0, ' ');
        std::string cases = std::to_string(c.cases);
        os << "  " << std::string(9 > cases.size() ? 9 - cases.size() : 0, ' ') << cases;
        if (!c.witness.empty()) {
            os << "  ";
            for (std::size_t i = 0; i < c.witness.size(); ++i) {
                if (i) os << " ";
                os << c.witness[i].coords_str();
            }
        }
        os << "\n";
    }
    return os.str();
}

std::string AxiomReport::json() const {
    nlohmann::json doc;
    doc["checks"] = nlohmann::json::array();
    for (const CheckResult& c : checks) {
        nlohmann::json entry;
        entry["name"] = c.name;
        entry["verdict"] = to_string(c.verdict);
        entry["cases"] = c.cases;
        entry["witness"] = nlohmann::json::array();
        for (const SElement& w : c.witness) {
            entry["witness"].push_back({w.x().str(), w.y().str()});
        }
        doc["checks"].push_back(std::move(entry));
    }
    doc["all_passed"] = all_passed();
    return doc.dump();
}

AxiomReport check_s_structure(const FiniteInstance& inst) {
    const Context ctx = inst.context();
    const SElement zero = SElement::zero(ctx);
    const auto& elems = inst.elements;
    AxiomReport rep;

    {
        Law law("add-closure");
        for (const SElement& s : elems) {
            for (const SElement& t : elems) {
                SElement sum = s + t;
                law.require(elems[enum_index(inst, sum)] == sum, s, t);
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("add-identity");
        for (const SElement& s : elems) {
            law.require(s + zero == s && zero + s == s, s);
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("add-inverse");
        for (const SElement& s : elems) {
            law.require(s + (-s) == zero, s);
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("add-associative");
        for (const SElement& s : elems) {
            for (const SElement& t : elems) {
                for (const SElement& r : elems) {
                    law.require((s + t) + r == s + (t + r), s, t, r);
                }
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("add-commutative");
        for (const SElement& s : elems) {
            for (const SElement& t : elems) {
                law.require(s + t == t + s, s, t);
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("mul-closure");
        for (const SElement& s : elems) {
            for (const SElement& t : elems) {
                SElement prod = s * t;
                law.require(elems[enum_index(inst, prod)] == prod, s, t);
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        // Everything subtraction should do in a commutative group.
        Law law("subtraction-laws");
        for (const SElement& s : elems) {
            for (const SElement& t : elems) {
                bool ok = s - s == zero && s - zero == s && zero - s == -s &&
                          s - t == -(t - s) && s - (-t) == s + t && -(-s) == s &&
                          -(s + t) == (-s) + (-t);
                law.require(ok, s, t);
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        // Existence: some element multiplies with zero to a nonzero result.
        CheckResult r{"zero-product-nonzero", Verdict::fail, 0, {}};
        for (const SElement& s : elems) {
            ++r.cases;
            if (zero * s != zero) {
                r.verdict = Verdict::witnessed;
                r.witness = {s};
                break;
            }
        }
        rep.checks.push_back(std::move(r));
    }
    {
        // The index classes are functional (0*s determines a unique index,
        // so they are pairwise disjoint) and they cover the whole set.
        Law law("index-partition");
        for (const SElement& s : elems) {
            SElement zs = zero * s;
            law.require(zs.is_scalar() && extract_scalar(zs) == s.alpha_index(), s);
        }
        rep.checks.push_back(law.take());
    }
    {
        CheckResult r{"index-nonzero-exists", Verdict::fail, 0, {}};
        for (const SElement& s : elems) {
            ++r.cases;
            if (!s.alpha_index().is_zero()) {
                r.verdict = Verdict::witnessed;
                r.witness = {s};
                break;
            }
        }
        rep.checks.push_back(std::move(r));
    }
    {
        CheckResult r{"scalars-proper-subset", Verdict::fail, 0, {}};
        for (const SElement& s : elems) {
            ++r.cases;
            if (!s.is_scalar()) {
                r.verdict = Verdict::witnessed;
                r.witness = {s};
                break;
            }
        }
        rep.checks.push_back(std::move(r));
    }
    return rep;
}

AxiomReport check_wheel_distributive(const FiniteInstance& inst) {
    const Context ctx = inst.context();
    const SElement zero = SElement::zero(ctx);
    const auto& elems = inst.elements;
    AxiomReport rep;

    {
        Law law("wheel-distributive");
        for (const SElement& s : elems) {
            const SElement correction = s * zero;
            for (const SElement& t : elems) {
                for (const SElement& r : elems) {
                    law.require(s * (t + r) + correction == (s * t) + (s * r), s, t, r);
                }
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("wheel-distributive-sub-form");
        for (const SElement& s : elems) {
            const SElement correction = s * zero;
            for (const SElement& t : elems) {
                for (const SElement& r : elems) {
                    law.require(s * (t + r) == (s * t) + (s * r) - correction, s, t, r);
                }
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        // Negating one factor costs two zero-product corrections.
        Law law("negation-product");
        for (const SElement& t : elems) {
            const SElement correction = t * zero;
            for (const SElement& s : elems) {
                law.require(-(t * s) == t * (-s) - correction - correction, t, s);
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        // For a scalar factor the corrections vanish.
        Law law("scalar-negation");
        for (const SElement& n : elems) {
            if (!n.is_scalar()) continue;
            for (const SElement& s : elems) {
                law.require(-(n * s) == n * (-s), n, s);
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("sign-rule-on-scalars");
        for (const SElement& m : elems) {
            if (!m.is_scalar()) continue;
            for (const SElement& n : elems) {
                if (!n.is_scalar()) continue;
                law.require((-m) * (-n) == m * n, m, n);
            }
        }
        rep.checks.push_back(law.take());
    }
    return rep;
}

AxiomReport check_s_associative(const FiniteInstance& inst) {
    const Context ctx = inst.context();
    const SElement zero = SElement::zero(ctx);
    const SElement one = SElement::one(ctx);
    const std::vector<Scalar> scalars = all_residues(inst);
    const auto& elems = inst.elements;
    AxiomReport rep;

    {
        Law law("s-associative");
        for (const Scalar& m : scalars) {
            const SElement em = embed_scalar(m);
            for (const Scalar& n : scalars) {
                const SElement en = embed_scalar(n);
                const SElement factor = (em - one) * (en - one);
                for (const SElement& s : elems) {
                    SElement lhs = em * (en * s);
                    SElement rhs = (em * en) * s - factor * (zero * s);
                    law.require(lhs == rhs, em, en, s);
                }
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("scalar-commutation");
        for (const Scalar& m : scalars) {
            const SElement em = embed_scalar(m);
            for (const Scalar& n : scalars) {
                const SElement en = embed_scalar(n);
                for (const SElement& s : elems) {
                    law.require(em * (en * s) == en * (em * s), em, en, s);
                }
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("index-scaling");
        for (const Scalar& m : scalars) {
            for (const SElement& s : elems) {
                law.require(scalar_mul(m, s).alpha_index() == m * s.alpha_index(),
                            embed_scalar(m), s);
            }
        }
        rep.checks.push_back(law.take());
    }
    return rep;
}

AxiomReport check_negative_theorems(const FiniteInstance& inst) {
    const Context ctx = inst.context();
    const SElement zero = SElement::zero(ctx);
    const SElement one = SElement::one(ctx);
    const auto& elems = inst.elements;
    AxiomReport rep;

    {
        CheckResult r{"not-distributive", Verdict::fail, 0, {}};
        for (const SElement& s : elems) {
            ++r.cases;
            if ((zero + zero) * s != (zero * s) + (zero * s)) {
                r.verdict = Verdict::witnessed;
                r.witness = {s};
                break;
            }
        }
        if (r.verdict != Verdict::witnessed) {
            throw WitnessNotFound("no distributivity violation in GF(" +
                                  std::to_string(inst.modulus) + ")^2");
        }
        rep.checks.push_back(std::move(r));
    }
    {
        CheckResult r{"not-associative", Verdict::fail, 0, {}};
        bool found = false;
        for (std::size_t i = 0; i < elems.size() && !found; ++i) {
            for (std::size_t j = 0; j < elems.size() && !found; ++j) {
                for (std::size_t k = 0; k < elems.size() && !found; ++k) {
                    ++r.cases;
                    const SElement& s = elems[i];
                    const SElement& t = elems[j];
                    const SElement& u = elems[k];
                    if ((s * t) * u != s * (t * u)) {
                        r.verdict = Verdict::witnessed;
                        r.witness = {s, t, u};
                        found = true;
                    }
                }
            }
        }
        if (!found) {
            throw WitnessNotFound("no associativity violation in GF(" +
                                  std::to_string(inst.modulus) + ")^2");
        }
        rep.checks.push_back(std::move(r));
    }
    {
        Law law("zero-not-one");
        law.require(zero != one, zero, one);
        rep.checks.push_back(law.take());
    }
    return rep;
}

AxiomReport check_regularity_and_bases(const FiniteInstance& inst) {
    const Context ctx = inst.context();
    const SElement zero = SElement::zero(ctx);
    const SElement one = SElement::one(ctx);
    const std::vector<Scalar> scalars = all_residues(inst);
    const auto& elems = inst.elements;
    AxiomReport rep;

    {
        // Lambda = the full scalar set: every index class is inhabited.
        Law law("complete-regular");
        LambdaSet lambda = lambda_set(inst);
        for (std::size_t i = 0; i < scalars.size(); ++i) {
            bool inhabited =
                i < lambda.indices.size() && lambda.indices[i] == scalars[i];
            law.require(inhabited, embed_scalar(scalars[i]));
        }
        rep.checks.push_back(law.take());
    }
    {
        // The defining formula a*(q0(1)+1) - 1, evaluated with the actual
        // pair arithmetic, agrees with the direct construction (0, a).
        Law law("standard-base-formula");
        const SElement q01_plus_1 = standard_base(Scalar::one(ctx)) + one;
        for (const Scalar& a : scalars) {
            SElement via_formula = scalar_mul(a, q01_plus_1) - one;
            SElement direct = standard_base(a);
            law.require(via_formula == direct && direct.alpha_index() == a,
                        embed_scalar(a));
        }
        rep.checks.push_back(law.take());
    }
    {
        // Base condition 1: shifting a base by any scalar stays in its class.
        Law law("base-shift-stays-in-class");
        for (const Scalar& a : scalars) {
            const SElement base = standard_base(a);
            for (const Scalar& b : scalars) {
                law.require((base + embed_scalar(b)).alpha_index() == a,
                            base, embed_scalar(b));
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        // Base condition 2: every member of a class is base + scalar.
        Law law("base-reaches-class");
        for (const Scalar& a : scalars) {
            const SElement base = standard_base(a);
            for (const SElement& s : elems) {
                if (s.alpha_index() != a) continue;
                bool reached = false;
                for (const Scalar& b : scalars) {
                    if (base + embed_scalar(b) == s) {
                        reached = true;
                        break;
                    }
                }
                law.require(reached, base, s);
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("equality-criterion");
        for (const SElement& s : elems) {
            for (const SElement& t : elems) {
                Decomposition ds = decompose(s);
                Decomposition dt = decompose(t);
                law.require((s == t) == (ds.x == dt.x && ds.y == dt.y), s, t);
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("base-additivity");
        for (const Scalar& a : scalars) {
            for (const Scalar& b : scalars) {
                law.require(standard_base(a) + standard_base(b) == standard_base(a + b),
                            standard_base(a), standard_base(b));
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("base-of-zero-is-zero");
        law.require(standard_base(Scalar::zero(ctx)) == zero);
        rep.checks.push_back(law.take());
    }
    {
        // The inhabited indices are closed under addition and negation.
        Law law("lambda-closed");
        LambdaSet lambda = lambda_set(inst);
        auto contains = [&lambda](const Scalar& a) {
            for (const Scalar& l : lambda.indices) {
                if (l == a) return true;
            }
            return false;
        };
        for (const Scalar& a : lambda.indices) {
            for (const Scalar& b : lambda.indices) {
                law.require(contains(a + b) && contains(-a),
                            embed_scalar(a), embed_scalar(b));
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        // The base unit sits in the index-1 class and ties the bases together:
        // 0*A = 1 = q0(0) + 1 and 1*A = A.
        Law law("base-unit-class");
        const SElement unit = SElement::base_unit(ctx);
        law.require(unit.alpha_index() == Scalar::one(ctx), unit);
        law.require(zero * unit == one, unit);
        law.require(zero * unit == standard_base(Scalar::zero(ctx)) + one, unit);
        law.require(one * unit == unit, unit);
        rep.checks.push_back(law.take());
    }
    {
        // Scaling the index-1 base lands in the matching class.
        Law law("scaled-base-class");
        const SElement q01 = standard_base(Scalar::one(ctx));
        for (const Scalar& n : scalars) {
            law.require(scalar_mul(n, q01).alpha_index() == n, embed_scalar(n));
        }
        rep.checks.push_back(law.take());
    }
    return rep;
}

AxiomReport check_unity_and_inverses(const FiniteInstance& inst) {
    const Context ctx = inst.context();
    const SElement zero = SElement::zero(ctx);
    const SElement one = SElement::one(ctx);
    const std::vector<Scalar> scalars = all_residues(inst);
    const auto& elems = inst.elements;
    AxiomReport rep;

    {
        Law law("unity-identity");
        for (const SElement& s : elems) {
            law.require(one * s == s && s * one == s, s);
        }
        rep.checks.push_back(law.take());
    }
    {
        // Scan every candidate: only (1,0) fixes everything.
        Law law("unity-unique");
        for (const SElement& e : elems) {
            bool fixes_all = true;
            for (const SElement& s : elems) {
                if (e * s != s) {
                    fixes_all = false;
                    break;
                }
            }
            law.require(fixes_all == (e == one), e);
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("unity-nonzero-scalar");
        law.require(one.is_scalar() && one != zero, one);
        rep.checks.push_back(law.take());
    }
    {
        // Every nonzero scalar has a scalar inverse; the brute scan and the
        // coefficient-ring inverse must agree.
        Law law("scalar-inverses-total");
        for (const Scalar& a : scalars) {
            if (a.is_zero()) continue;
            const SElement ea = embed_scalar(a);
            std::optional<SElement> found;
            for (const Scalar& b : scalars) {
                if (ea * embed_scalar(b) == one) {
                    found = embed_scalar(b);
                    break;
                }
            }
            law.require(found.has_value() && *found == embed_scalar(a.inverse()), ea);
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("unity-inverse-self");
        Scalar u = Scalar::one(ctx);
        law.require(u.inverse() == u, one);
        rep.checks.push_back(law.take());
    }
    {
        // The scalar set is fixed pointwise by the unity.
        Law law("scalars-fixed-by-unity");
        for (const Scalar& a : scalars) {
            law.require(one * embed_scalar(a) == embed_scalar(a), embed_scalar(a));
        }
        rep.checks.push_back(law.take());
    }
    return rep;
}

AxiomReport check_scalar_field_iso(const FiniteInstance& inst) {
    const Context ctx = inst.context();
    const SElement zero = SElement::zero(ctx);
    const SElement one = SElement::one(ctx);
    const std::vector<Scalar> scalars = all_residues(inst);
    const auto& elems = inst.elements;
    AxiomReport rep;

    {
        // Injective onto the scalar elements, which are exactly {(r, 0)}.
        Law law("embed-bijective");
        std::size_t scalar_count = 0;
        for (const SElement& s : elems) {
            if (s.is_scalar()) ++scalar_count;
        }
        for (std::size_t i = 0; i < scalars.size(); ++i) {
            const SElement ei = embed_scalar(scalars[i]);
            bool distinct = true;
            for (std::size_t j = 0; j < i; ++j) {
                if (embed_scalar(scalars[j]) == ei) distinct = false;
            }
            law.require(distinct && ei.is_scalar() && scalar_count == scalars.size(),
                        ei);
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("embed-add-homomorphism");
        for (const Scalar& a : scalars) {
            for (const Scalar& b : scalars) {
                law.require(embed_scalar(a) + embed_scalar(b) == embed_scalar(a + b),
                            embed_scalar(a), embed_scalar(b));
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("embed-mul-homomorphism");
        for (const Scalar& a : scalars) {
            for (const Scalar& b : scalars) {
                law.require(embed_scalar(a) * embed_scalar(b) == embed_scalar(a * b),
                            embed_scalar(a), embed_scalar(b));
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        // Field axioms of the scalar subring, checked with the pair operations.
        Law law("scalars-form-field");
        std::vector<SElement> emb;
        emb.reserve(scalars.size());
        for (const Scalar& a : scalars) emb.push_back(embed_scalar(a));
        for (const SElement& a : emb) {
            for (const SElement& b : emb) {
                for (const SElement& c : emb) {
                    law.require((a + b) + c == a + (b + c), a, b, c);
                    law.require((a * b) * c == a * (b * c), a, b, c);
                    law.require(a * (b + c) == a * b + a * c, a, b, c);
                }
                law.require(a + b == b + a, a, b);
                law.require(a * b == b * a, a, b);
            }
            law.require(a + zero == a, a);
            law.require(a + (-a) == zero, a);
            law.require(a * one == a, a);
        }
        for (const SElement& a : emb) {
            if (a == zero) continue;
            bool invertible = false;
            for (const SElement& b : emb) {
                if (a * b == one) invertible = true;
            }
            law.require(invertible, a);
        }
        law.require(zero != one);
        rep.checks.push_back(law.take());
    }
    return rep;
}

AxiomReport check_division_theorems(const FiniteInstance& inst) {
    const Context ctx = inst.context();
    const SElement zero = SElement::zero(ctx);
    const std::vector<Scalar> scalars = all_residues(inst);
    const auto& elems = inst.elements;
    AxiomReport rep;

    {
        Law law("division-satisfies-definition");
        for (const SElement& s : elems) {
            for (const Scalar& m : scalars) {
                if (m.is_zero()) continue;
                SElement q = div_by_scalar(s, m);
                law.require(verify_quotient(s, m, q), s, embed_scalar(m));
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("division-roundtrip");
        for (const SElement& s : elems) {
            for (const Scalar& m : scalars) {
                if (m.is_zero()) continue;
                law.require(div_by_scalar(scalar_mul(m, s), m) == s,
                            s, embed_scalar(m));
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("scalar-quotient-formula");
        for (const Scalar& n : scalars) {
            for (const Scalar& m : scalars) {
                if (m.is_zero()) continue;
                DivisionOutcome out = divide(embed_scalar(n), embed_scalar(m));
                law.require(out.ok() && *out.value == embed_scalar(m.inverse() * n),
                            embed_scalar(n), embed_scalar(m));
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("div-zero-defining-property");
        for (const Scalar& a : scalars) {
            if (a.is_zero()) continue;
            SElement q = div_by_zero(a);
            law.require(zero * q == embed_scalar(a) &&
                            verify_quotient(embed_scalar(a), Scalar::zero(ctx), q),
                        embed_scalar(a));
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("div-zero-injective");
        for (const Scalar& a : scalars) {
            if (a.is_zero()) continue;
            for (const Scalar& b : scalars) {
                if (b.is_zero() || b == a) continue;
                law.require(div_by_zero(a) != div_by_zero(b),
                            embed_scalar(a), embed_scalar(b));
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("div-zero-additivity");
        for (const Scalar& a : scalars) {
            if (a.is_zero()) continue;
            for (const Scalar& b : scalars) {
                if (b.is_zero() || (a + b).is_zero()) continue;
                law.require(div_by_zero(a) + div_by_zero(b) == div_by_zero(a + b),
                            embed_scalar(a), embed_scalar(b));
            }
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("div-zero-self-cancellation");
        for (const Scalar& a : scalars) {
            if (a.is_zero()) continue;
            law.require(div_by_zero(a) - div_by_zero(a) == zero, embed_scalar(a));
        }
        rep.checks.push_back(law.take());
    }
    {
        // Pure function: repeated evaluation gives the identical element.
        Law law("div-zero-well-defined");
        for (const Scalar& a : scalars) {
            if (a.is_zero()) continue;
            law.require(div_by_zero(a) == div_by_zero(a), embed_scalar(a));
        }
        rep.checks.push_back(law.take());
    }
    {
        Law law("zero-over-zero-indeterminate");
        bool dispatch_ok = divide(zero, zero).status == DivisionStatus::indeterminate;
        bool direct_ok = false;
        try {
            div_by_zero(Scalar::zero(ctx));
        } catch (const IndeterminateDivision&) {
            direct_ok = true;
        }
        law.require(dispatch_ok && direct_ok, zero);
        rep.checks.push_back(law.take());
    }
    {
        Law law("nonscalar-by-zero-no-solution");
        for (const SElement& s : elems) {
            if (s.is_scalar()) continue;
            law.require(divide(s, zero).status == DivisionStatus::no_solution, s);
        }
        rep.checks.push_back(law.take());
    }
    return rep;
}

AxiomReport run_full_suite(std::int64_t p) {
    if (p > 13) {
        throw ConstructionError("suite modulus capped at 13, got " + std::to_string(p));
    }
    FiniteInstance inst = FiniteInstance::make(p);
    AxiomReport rep;
    auto append = [&rep](AxiomReport part) {
        for (CheckResult& c : part.checks) rep.checks.push_back(std::move(c));
    };
    append(check_s_structure(inst));
    append(check_wheel_distributive(inst));
    append(check_s_associative(inst));
    append(check_negative_theorems(inst));
    append(check_regularity_and_bases(inst));
    append(check_unity_and_inverses(inst));
    append(check_scalar_field_iso(inst));
    append(check_division_theorems(inst));
    return rep;
}

} // namespace sfield
