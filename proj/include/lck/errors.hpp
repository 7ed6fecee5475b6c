#pragma once

#include <stdexcept>
#include <string>

namespace lck {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in spaces of different dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant (antisymmetry, Jacobi, J^2 = -1, ...) is violated.
/// The message carries the violating indices and residual.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (n = 0, c = 0, degree 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed scalar string or document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lck
