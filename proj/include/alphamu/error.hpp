#pragma once

#include <stdexcept>
#include <string>

namespace alphamu {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument sits on a pole of a gamma function in a numerator.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// No vertical contour separates the two pole families.
class InfeasibleContour : public DomainError {
public:
    using DomainError::DomainError;
};

/// A requested moment (or similar integral) does not exist.
class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An evaluator failed to reach its tolerance.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A residue series did not settle within its term budget.
class SeriesDivergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

inline void require_positive(double v, const char* name) {
    if (!(v > 0.0)) throw DomainError(std::string(name) + " must be positive, got " + std::to_string(v));
}

}  // namespace detail
}  // namespace alphamu
