#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sfield/errors.hpp"

namespace sfield {

using Int = boost::multiprecision::cpp_int;

enum class Backend { rational, prime_field, integer };

/// Identifies the coefficient ring a value lives in: the rationals, a prime
/// field GF(p), or the plain integers.  The first two are fields; the integers
/// are a commutative ring whose only units are +-1.
class Context {
public:
    static Context rationals() { return {Backend::rational, 0}; }
    static Context integers() { return {Backend::integer, 0}; }
    /// GF(p); p is checked prime by trial division and must be <= 2^31.
    static Context gf(std::int64_t p);

    Backend backend() const { return backend_; }
    std::int64_t modulus() const { return modulus_; }
    bool is_field() const { return backend_ != Backend::integer; }

    bool operator==(const Context&) const = default;

    std::string str() const;

private:
    Context(Backend b, std::int64_t m) : backend_(b), modulus_(m) {}

    Backend backend_;
    std::int64_t modulus_; // 0 unless prime_field
};

/// One exact element of the coefficient ring.  Immutable value type; all
/// operations are pure, so values are safe to share across threads.
///
/// Rationals are always normalized: gcd(|num|, den) = 1 and den > 0.
/// Prime-field residues are kept in [0, p).  Arithmetic between different
/// contexts throws BackendMismatch rather than coercing.
class Scalar {
public:
    static Scalar rational(Int num, Int den = 1);
    static Scalar integer(Int value);
    static Scalar gf(Int value, std::int64_t p); // reduces value mod p

    static Scalar zero(const Context& ctx) { return from_integer(0, ctx); }
    static Scalar one(const Context& ctx) { return from_integer(1, ctx); }

    /// Integer literal interpreted in ctx (reduced mod p for GF(p)).
    static Scalar from_integer(Int value, const Context& ctx);
    /// num/den interpreted in ctx.  Throws NotInvertible when den means
    /// nothing there (den = 0 mod p, or den != +-1 over the integers).
    static Scalar from_fraction(Int num, Int den, const Context& ctx);

    const Context& context() const { return ctx_; }
    Backend backend() const { return ctx_.backend(); }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator-() const;

    /// Multiplicative inverse.  Throws NotInvertible for zero in any backend
    /// and for integers other than +-1.
    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    /// "p/q" (or just "p" when q = 1) for rationals, a decimal residue or
    /// integer otherwise.
    std::string str() const;

private:
    Scalar(Context ctx, Int num, Int den);

    void require_same_context(const Scalar& rhs) const;

    Context ctx_;
    Int num_;
    Int den_; // always 1 outside the rational backend
};

} // namespace sfield
