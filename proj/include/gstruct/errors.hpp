#pragma once

#include <stdexcept>
#include <string>

namespace gstruct {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (rationals, Salamon strings, JSON files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands of incompatible shape.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Inverse requested of a singular matrix.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Gaussian elimination requested over the Lorentz numbers, which have zero divisors.
class ZeroDivisorError : public Error {
 public:
  using Error::Error;
};

/// Quadratic scalars with different iota^2 combined.
class KappaMismatchError : public Error {
 public:
  using Error::Error;
};

/// A precondition or structural invariant does not hold.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace gstruct
