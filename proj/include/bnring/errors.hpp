#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bnring {

/// Exact integer used for every count, coefficient and dimension.
using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-side precondition was violated (bad syntax, parameter out of range).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The request is well formed but outside what the library computes
/// (genus too small for a comparison, symplectic rank beyond the oracle, ...).
class Unsupported : public Error {
public:
    using Error::Error;
};

/// A mathematical invariant failed.  Always an implementation bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

inline void require(bool cond, const std::string& what)
{
    if (!cond) throw InvalidArgument(what);
}

inline void ensure(bool cond, const std::string& what)
{
    if (!cond) throw ConsistencyError(what);
}

} // namespace bnring
