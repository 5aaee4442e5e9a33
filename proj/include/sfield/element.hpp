#pragma once

#include <string>

#include "sfield/scalar.hpp"

namespace sfield {

/// One element of the pair extension S = R x R over the coefficient ring R.
///
/// Addition is componentwise; multiplication is
///
///   (x,y) * (u,v) = (x*u + y + v - x*v - y*u,  y*v + x*v + y*u)
///
/// which keeps (S,+) a commutative group and makes `*` commutative but,
/// deliberately, neither associative nor distributive: 0 * (x,y) = (y,0),
/// so zero multiplies most elements to something nonzero.  The elements
/// (r,0) form a copy of R inside S and are called scalars.
class SElement {
public:
    /// Coordinates must share one context.
    SElement(Scalar first, Scalar second);

    static SElement zero(const Context& ctx);      // (0,0), the additive identity
    static SElement one(const Context& ctx);       // (1,0), the unity of *
    static SElement base_unit(const Context& ctx); // A = (1,1); satisfies 0*A = 1

    const Scalar& x() const { return x_; }
    const Scalar& y() const { return y_; }
    const Context& context() const { return x_.context(); }

    SElement operator+(const SElement& rhs) const;
    SElement operator-(const SElement& rhs) const;
    SElement operator*(const SElement& rhs) const;
    SElement operator-() const;

    bool operator==(const SElement& rhs) const { return x_ == rhs.x_ && y_ == rhs.y_; }
    bool operator!=(const SElement& rhs) const { return !(*this == rhs); }

    /// The index a with 0*s = (a, 0).  For the pair model this is the second
    /// coordinate; it is 0 exactly for scalars.
    Scalar alpha_index() const { return y_; }
    bool is_scalar() const { return y_.is_zero(); }

    std::string coords_str() const;    // "(x, y)"
    std::string canonical_str() const; // "x - 1 + y*A"

private:
    void require_same_context(const SElement& rhs) const;

    Scalar x_;
    Scalar y_;
};

/// The ring embedding r -> (r, 0) of R onto the scalars of S.
SElement embed_scalar(const Scalar& r);

/// Inverse of embed_scalar; throws NotAScalar when s.y() != 0.
Scalar extract_scalar(const SElement& s);

/// The standard base q0(a) = a*(q0(1)+1) - 1 = (0, a), the canonical element
/// with index a.
SElement standard_base(const Scalar& alpha);

/// The unique scalars (x, y) with s = x - 1 + y*A.
struct Decomposition {
    Scalar x;
    Scalar y;

    bool operator==(const Decomposition& rhs) const { return x == rhs.x && y == rhs.y; }
};

/// For the pair model the decomposition is just the coordinates.
Decomposition decompose(const SElement& s);

/// Evaluates x - 1 + y*A with the actual pair-model arithmetic;
/// compose(decompose(s)) == s for every s.
SElement compose(const Decomposition& d);

/// m*s for a scalar m: (m*(x-y) + y, m*y).  Always equals
/// embed_scalar(m) * s, but avoids the full product.
SElement scalar_mul(const Scalar& m, const SElement& s);

} // namespace sfield
