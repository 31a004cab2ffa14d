#pragma once

#include <stdexcept>
#include <string>

namespace halfwell {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid potential parameters (non-positive depth, width or strength).
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Iterative procedure did not converge, or a validation invariant failed.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Requested moment is infinite for this potential.
class DivergentMoment : public Error {
 public:
  using Error::Error;
};

}  // namespace halfwell
