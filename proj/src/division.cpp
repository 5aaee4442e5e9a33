#include "sfield/division.hpp"

#include <cassert>
#include <utility>

namespace sfield {

std::string to_string(DivisionStatus status) {
    switch (status) {
        case DivisionStatus::quotient: return "quotient";
        case DivisionStatus::indeterminate: return "indeterminate";
        case DivisionStatus::no_solution: return "no-solution";
        case DivisionStatus::not_invertible: return "not-invertible";
        case DivisionStatus::not_a_scalar_divisor: return "not-a-scalar-divisor";
    }
    return "?";
}

SElement div_by_scalar(const SElement& s, const Scalar& m) {
    if (m.context() != s.context()) {
        throw BackendMismatch("cannot divide " + s.context().str() + " by " +
                              m.context().str());
    }
    Scalar inv = m.inverse();
    Decomposition d = decompose(s);
    Scalar q2 = inv * d.y;
    Scalar q1 = inv * (d.x + d.y - q2);
    return compose({q1, q2});
}

SElement div_by_zero(const Scalar& alpha) {
    if (!alpha.context().is_field()) {
        throw NotInvertible("division by zero is only defined over a field "
                            "coefficient ring, not " + alpha.context().str());
    }
    if (alpha.is_zero()) {
        throw IndeterminateDivision("0/0 is indeterminate");
    }
    return standard_base(alpha);
}

DivisionOutcome divide(const SElement& s, const SElement& t) {
    if (s.context() != t.context()) {
        throw BackendMismatch("cannot divide " + s.context().str() + " by " +
                              t.context().str());
    }
    if (!t.is_scalar()) {
        return DivisionOutcome::of(DivisionStatus::not_a_scalar_divisor);
    }
    Scalar m = extract_scalar(t);
    if (!m.is_zero()) {
        try {
            SElement q = div_by_scalar(s, m);
            assert(verify_quotient(s, m, q)); // a quotient is only ever verified
            return DivisionOutcome::quotient(std::move(q));
        } catch (const NotInvertible&) {
            return DivisionOutcome::of(DivisionStatus::not_invertible);
        }
    }
    // m = 0.  0*q is always scalar, so non-scalar s has no quotient at all.
    if (!s.is_scalar()) {
        return DivisionOutcome::of(DivisionStatus::no_solution);
    }
    Scalar alpha = extract_scalar(s);
    if (alpha.is_zero()) {
        return DivisionOutcome::of(DivisionStatus::indeterminate);
    }
    try {
        SElement q = div_by_zero(alpha);
        assert(verify_quotient(s, m, q));
        return DivisionOutcome::quotient(std::move(q));
    } catch (const NotInvertible&) {
        return DivisionOutcome::of(DivisionStatus::not_invertible);
    }
}

bool is_reversible(const Scalar& alpha) {
    if (alpha.is_zero()) return false;
    try {
        Scalar star = alpha.inverse();
        const Context& ctx = alpha.context();
        SElement lhs = standard_base(Scalar::one(ctx));
        SElement rhs = scalar_mul(star, standard_base(alpha) + embed_scalar(alpha)) -
                       embed_scalar(alpha);
        return lhs == rhs;
    } catch (const NotInvertible&) {
        return false;
    }
}

bool verify_quotient(const SElement& s, const Scalar& m, const SElement& q) {
    if (m.context() != s.context() || q.context() != s.context()) {
        throw BackendMismatch("quotient check needs one shared context");
    }
    return scalar_mul(m, q) == s;
}

} // namespace sfield
