#include "sfield/element.hpp"

#include <utility>

namespace sfield {

SElement::SElement(Scalar first, Scalar second)
    : x_(std::move(first)), y_(std::move(second)) {
    if (x_.context() != y_.context()) {
        throw BackendMismatch("pair coordinates must share one context: " +
                              x_.context().str() + " vs " + y_.context().str());
    }
}

SElement SElement::zero(const Context& ctx) {
    return {Scalar::zero(ctx), Scalar::zero(ctx)};
}

SElement SElement::one(const Context& ctx) {
    return {Scalar::one(ctx), Scalar::zero(ctx)};
}

SElement SElement::base_unit(const Context& ctx) {
    return {Scalar::one(ctx), Scalar::one(ctx)};
}

void SElement::require_same_context(const SElement& rhs) const {
    if (context() != rhs.context()) {
        throw BackendMismatch("cannot combine " + context().str() + " with " +
                              rhs.context().str());
    }
}

SElement SElement::operator+(const SElement& rhs) const {
    require_same_context(rhs);
    return {x_ + rhs.x_, y_ + rhs.y_};
}

SElement SElement::operator-() const {
    return {-x_, -y_};
}

SElement SElement::operator-(const SElement& rhs) const {
    return *this + (-rhs);
}

SElement SElement::operator*(const SElement& rhs) const {
    require_same_context(rhs);
    const Scalar& x = x_;
    const Scalar& y = y_;
    const Scalar& u = rhs.x_;
    const Scalar& v = rhs.y_;
    return {x * u + y + v - x * v - y * u, y * v + x * v + y * u};
}

std::string SElement::coords_str() const {
    return "(" + x_.str() + ", " + y_.str() + ")";
}

std::string SElement::canonical_str() const {
    Decomposition d = decompose(*this);
    return d.x.str() + " - 1 + " + d.y.str() + "*A";
}

SElement embed_scalar(const Scalar& r) {
    return {r, Scalar::zero(r.context())};
}

Scalar extract_scalar(const SElement& s) {
    if (!s.is_scalar()) {
        throw NotAScalar(s.coords_str() + " is not a scalar");
    }
    return s.x();
}

SElement standard_base(const Scalar& alpha) {
    return {Scalar::zero(alpha.context()), alpha};
}

Decomposition decompose(const SElement& s) {
    return {s.x(), s.y()};
}

SElement compose(const Decomposition& d) {
    const Context& ctx = d.x.context();
    return embed_scalar(d.x) - SElement::one(ctx) +
           scalar_mul(d.y, SElement::base_unit(ctx));
}

SElement scalar_mul(const Scalar& m, const SElement& s) {
    if (m.context() != s.context()) {
        throw BackendMismatch("cannot combine " + m.context().str() + " with " +
                              s.context().str());
    }
    return {m * (s.x() - s.y()) + s.y(), m * s.y()};
}

} // namespace sfield
