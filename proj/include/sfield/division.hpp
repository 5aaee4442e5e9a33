#pragma once

#include <optional>
#include <string>

#include "sfield/element.hpp"

namespace sfield {

enum class DivisionStatus {
    quotient,             // a unique q with s = m*q exists and was verified
    indeterminate,        // 0/0: every scalar satisfies the defining equation
    no_solution,          // s/0 with s non-scalar: 0*q is always scalar
    not_invertible,       // the divisor has no inverse in the coefficient ring
    not_a_scalar_divisor, // the divisor is not a scalar element
};

std::string to_string(DivisionStatus status);

/// Outcome of `divide`; carries a value exactly when status == quotient.
struct DivisionOutcome {
    DivisionStatus status;
    std::optional<SElement> value;

    static DivisionOutcome quotient(SElement q) {
        return {DivisionStatus::quotient, std::move(q)};
    }
    static DivisionOutcome of(DivisionStatus status) { return {status, std::nullopt}; }

    bool ok() const { return status == DivisionStatus::quotient; }
};

/// s/m for an invertible scalar m, via the closed form
///
///   q = ( m^-1 * (x + y - m^-1*y),  m^-1*y )   with (x, y) = decompose(s),
///
/// the unique q with scalar_mul(m, q) == s.  Throws NotInvertible when m is
/// zero or a non-unit integer.
SElement div_by_scalar(const SElement& s, const Scalar& m);

/// alpha/0: the reversible standard base (0, alpha), the unique element q
/// with 0*q = (alpha, 0).  Injective in alpha.  Requires a field backend
/// (throws NotInvertible over the integers) and alpha != 0 (throws
/// IndeterminateDivision for 0/0).
SElement div_by_zero(const Scalar& alpha);

/// Total dispatch over both division operations.  Never throws for
/// same-context arguments; every failure mode is encoded in the outcome.
DivisionOutcome divide(const SElement& s, const SElement& t);

/// Constructively checks the reversal identity
///
///   q0(1) = a* . (q0(alpha) + alpha) - alpha   with a* = alpha^-1,
///
/// evaluated with full pair-model arithmetic.  True exactly when alpha is a
/// nonzero unit of the coefficient ring.
bool is_reversible(const Scalar& alpha);

/// The defining equation of division: scalar_mul(m, q) == s.  This is the
/// independent check used against the closed-form quotients.
bool verify_quotient(const SElement& s, const Scalar& m, const SElement& q);

} // namespace sfield
