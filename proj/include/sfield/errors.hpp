#pragma once

#include <stdexcept>

namespace sfield {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Values from different backends (or different moduli) never mix; there is
/// no implicit coercion.
class BackendMismatch : public Error {
public:
    using Error::Error;
};

/// A multiplicative inverse was requested where none exists.
class NotInvertible : public Error {
public:
    using Error::Error;
};

/// A scalar was extracted from an element whose second coordinate is nonzero.
class NotAScalar : public Error {
public:
    using Error::Error;
};

/// Invalid construction parameters: composite modulus, modulus out of range,
/// zero denominator, suite size out of bounds.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// 0/0: every scalar satisfies the defining equation, so no unique value exists.
class IndeterminateDivision : public Error {
public:
    using Error::Error;
};

/// An exhaustive scan failed to find a witness that must exist.  This can only
/// mean the arithmetic itself is broken.
class WitnessNotFound : public Error {
public:
    using Error::Error;
};

} // namespace sfield
