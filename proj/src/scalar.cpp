#include "sfield/scalar.hpp"

#include <mutex>
#include <set>
#include <utility>

namespace sfield {

namespace {

bool trial_division_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

// Primality is checked once per modulus; the memo keeps repeated element
// construction cheap for large p.
void validate_modulus(std::int64_t p) {
    static std::mutex mu;
    static std::set<std::int64_t> known;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (known.count(p) != 0) return;
    }
    if (p > (std::int64_t{1} << 31)) {
        throw ConstructionError("modulus exceeds 2^31: " + std::to_string(p));
    }
    if (!trial_division_prime(p)) {
        throw ConstructionError("modulus is not prime: " + std::to_string(p));
    }
    std::lock_guard<std::mutex> lock(mu);
    known.insert(p);
}

Int mod_reduce(const Int& v, std::int64_t p) {
    Int r = v % p;
    if (r < 0) r += p;
    return r;
}

// au == 1 (mod p) for 0 < a < p, p prime.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return t < 0 ? t + p : t;
}

} // namespace

Context Context::gf(std::int64_t p) {
    validate_modulus(p);
    return {Backend::prime_field, p};
}

std::string Context::str() const {
    switch (backend_) {
        case Backend::rational: return "rational";
        case Backend::prime_field: return "gf:" + std::to_string(modulus_);
        case Backend::integer: return "integer";
    }
    return "?";
}

Scalar::Scalar(Context ctx, Int num, Int den)
    : ctx_(ctx), num_(std::move(num)), den_(std::move(den)) {
    if (ctx_.backend() == Backend::rational) {
        if (den_ == 0) throw ConstructionError("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
}

Scalar Scalar::rational(Int num, Int den) {
    return {Context::rationals(), std::move(num), std::move(den)};
}

Scalar Scalar::integer(Int value) {
    return {Context::integers(), std::move(value), 1};
}

Scalar Scalar::gf(Int value, std::int64_t p) {
    Context ctx = Context::gf(p);
    return {ctx, mod_reduce(value, p), 1};
}

Scalar Scalar::from_integer(Int value, const Context& ctx) {
    switch (ctx.backend()) {
        case Backend::rational: return rational(std::move(value), 1);
        case Backend::prime_field: return gf(std::move(value), ctx.modulus());
        case Backend::integer: return integer(std::move(value));
    }
    throw ConstructionError("unknown backend");
}

Scalar Scalar::from_fraction(Int num, Int den, const Context& ctx) {
    if (den == 0) throw ConstructionError("zero denominator");
    switch (ctx.backend()) {
        case Backend::rational:
            return rational(std::move(num), std::move(den));
        case Backend::prime_field: {
            Scalar d = gf(den, ctx.modulus());
            return gf(std::move(num), ctx.modulus()) * d.inverse();
        }
        case Backend::integer: {
            if (den < 0) {
                num = -num;
                den = -den;
            }
            Int g = gcd(abs(num), den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
            if (den != 1) {
                throw NotInvertible("fraction with denominator " + den.str() +
                                    " is not an integer");
            }
            return integer(std::move(num));
        }
    }
    throw ConstructionError("unknown backend");
}

void Scalar::require_same_context(const Scalar& rhs) const {
    if (ctx_ != rhs.ctx_) {
        throw BackendMismatch("cannot combine " + ctx_.str() + " with " + rhs.ctx_.str());
    }
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_context(rhs);
    switch (backend()) {
        case Backend::rational:
            return {ctx_, num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_};
        case Backend::prime_field: {
            auto a = num_.convert_to<std::int64_t>();
            auto b = rhs.num_.convert_to<std::int64_t>();
            return {ctx_, (a + b) % ctx_.modulus(), 1};
        }
        case Backend::integer:
            return {ctx_, num_ + rhs.num_, 1};
    }
    throw ConstructionError("unknown backend");
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_context(rhs);
    switch (backend()) {
        case Backend::rational:
            return {ctx_, num_ * rhs.num_, den_ * rhs.den_};
        case Backend::prime_field: {
            // residues < 2^31, so the product fits in a signed 64-bit value
            auto a = num_.convert_to<std::int64_t>();
            auto b = rhs.num_.convert_to<std::int64_t>();
            return {ctx_, (a * b) % ctx_.modulus(), 1};
        }
        case Backend::integer:
            return {ctx_, num_ * rhs.num_, 1};
    }
    throw ConstructionError("unknown backend");
}

Scalar Scalar::operator-() const {
    if (backend() == Backend::prime_field) {
        return {ctx_, num_ == 0 ? Int{0} : Int{ctx_.modulus() - num_}, 1};
    }
    return {ctx_, -num_, den_};
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    return *this + (-rhs);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw NotInvertible("zero has no multiplicative inverse");
    switch (backend()) {
        case Backend::rational:
            return {ctx_, den_, num_};
        case Backend::prime_field:
            return {ctx_, mod_inverse(num_.convert_to<std::int64_t>(), ctx_.modulus()), 1};
        case Backend::integer:
            if (num_ == 1 || num_ == -1) return *this;
            throw NotInvertible(num_.str() + " is not invertible over the integers");
    }
    throw ConstructionError("unknown backend");
}

bool Scalar::operator==(const Scalar& rhs) const {
    return ctx_ == rhs.ctx_ && num_ == rhs.num_ && den_ == rhs.den_;
}

std::string Scalar::str() const {
    if (backend() == Backend::rational && den_ != 1) {
        return num_.str() + "/" + den_.str();
    }
    return num_.str();
}

} // namespace sfield
