#pragma once

#include <stdexcept>

namespace ivalg {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Endpoint pair with lo > hi where a proper interval is required.
struct ImproperEndpoints : Error {
  using Error::Error;
};

// Operand outside the domain of the requested operation.
struct DomainError : Error {
  using Error::Error;
};

// Algebra element with a vanishing block determinant.
struct NotInvertible : Error {
  using Error::Error;
};

// The ratio test routing exact vs. Euclidean division failed; the other
// family applies.
struct RatioConditionFailed : Error {
  using Error::Error;
};

// Zero-centered divisor: the exact zero-containing system is singular.
struct CenteredDivisor : Error {
  using Error::Error;
};

// Degenerate (point) divisor in Euclidean division.
struct DegenerateDivisor : Error {
  using Error::Error;
};

// A named strict inequality required by a Euclidean path does not hold.
struct PreconditionFailed : Error {
  using Error::Error;
};

// Operand sign pattern that no division family covers.
struct Unsupported : Error {
  using Error::Error;
};

// Pivot entry too small to divide by.
struct NumericalPivot : Error {
  using Error::Error;
};

// Right-hand side already negative before any pivoting.
struct Infeasible : Error {
  using Error::Error;
};

// Malformed textual or JSON input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace ivalg
