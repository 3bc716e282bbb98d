#pragma once

#include <stdexcept>
#include <string>

namespace qfaulhaber {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// Exact division was requested but no exact quotient exists over Z[t].
struct NotDivisible : Error {
    using Error::Error;
};

struct BothZero : Error {
    using Error::Error;
};

struct NegativeArgument : Error {
    using Error::Error;
};

struct NegativePairCount : Error {
    using Error::Error;
};

/// A value expected to be a polynomial in q carried an odd t-exponent.
struct HalfPowerPresent : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct NotTriangular : Error {
    using Error::Error;
};

struct SingularDiagonal : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

/// Fraction-free elimination hit a non-exact division; mathematically
/// impossible over an integral domain, so this always signals a bug.
struct InternalDivisionFailed : Error {
    using Error::Error;
};

/// A rational-function value that must reduce to a polynomial did not.
struct NotPolynomial : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct NoConsistentFit : Error {
    using Error::Error;
};

struct UnderDetermined : Error {
    using Error::Error;
};

}  // namespace qfaulhaber
