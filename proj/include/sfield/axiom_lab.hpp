#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sfield/division.hpp"

namespace sfield {

/// All p^2 elements of GF(p) x GF(p), enumerated row-major in (x, y) with
/// ascending residues.  Every "first witness" below refers to this order.
struct FiniteInstance {
    std::int64_t modulus;
    std::vector<SElement> elements;

    /// Builds the instance; p is validated prime.  Element count and a sample
    /// of closure products are verified during construction.
    static FiniteInstance make(std::int64_t p);

    Context context() const { return Context::gf(modulus); }
};

/// The set of indices a with a nonempty class {s : 0*s = (a,0)}.  For the
/// pair model over a field this is all of GF(p).
struct LambdaSet {
    std::vector<Scalar> indices;
};

LambdaSet lambda_set(const FiniteInstance& inst);

enum class Verdict {
    pass,      // a universally quantified law held on every case
    fail,      // a counterexample was found (carried as the witness)
    witnessed, // an existence claim, with the first witness in enumeration order
};

std::string to_string(Verdict verdict);

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::pass;
    std::size_t cases = 0;          // exact number of cases examined
    std::vector<SElement> witness;  // counterexample or existence witness
};

struct AxiomReport {
    std::vector<CheckResult> checks;

    bool all_passed() const; // no check has verdict fail
    /// Human-readable table, one row per check.  Byte-deterministic.
    std::string table() const;
    /// Machine-readable document: one record per check with the witness
    /// coordinates as decimal strings.
    std::string json() const;
};

/// Addition is a commutative group, multiplication is closed, zero multiplies
/// something to a nonzero value, and the index classes partition the set.
AxiomReport check_s_structure(const FiniteInstance& inst);

/// s*(t+r) + s*0 = s*t + s*r over every triple, in both the stated form and
/// the subtraction form s*(t+r) = s*t + s*r - s*0.
AxiomReport check_wheel_distributive(const FiniteInstance& inst);

/// m*(n*s) = (m*n)*s - ((m-1)*(n-1))*(0*s) for all scalar pairs and all s,
/// plus scalar commutation m*(n*s) = n*(m*s) and index scaling.
AxiomReport check_s_associative(const FiniteInstance& inst);

/// The laws that must FAIL: plain distributivity and plain associativity both
/// have concrete violations, and 0 != 1.  Throws WitnessNotFound if a
/// violation cannot be found, since that would mean broken arithmetic.
AxiomReport check_negative_theorems(const FiniteInstance& inst);

/// Lambda equals the whole scalar set, the standard bases satisfy both base
/// conditions for every index, the equality criterion, and base additivity.
AxiomReport check_regularity_and_bases(const FiniteInstance& inst);

/// (1,0) is the unique unity, every nonzero scalar has a scalar inverse,
/// 1^-1 = 1, and the scalars are fixed pointwise by the unity.
AxiomReport check_unity_and_inverses(const FiniteInstance& inst);

/// r -> (r,0) is a ring isomorphism onto the scalars, and the scalars satisfy
/// all field axioms by enumeration.
AxiomReport check_scalar_field_iso(const FiniteInstance& inst);

/// Every quotient s/m (m != 0) satisfies the defining equation and the
/// roundtrip (m*s)/m = s; the division-by-zero table is correct, injective,
/// additive where defined, self-cancelling, and 0/0 stays indeterminate.
AxiomReport check_division_theorems(const FiniteInstance& inst);

/// All checks above in canonical order, aggregated into one report.
/// p must be prime and <= 13 (ConstructionError otherwise); the cap keeps the
/// (p^2)^3 enumerations to desk scale.
AxiomReport run_full_suite(std::int64_t p);

} // namespace sfield
