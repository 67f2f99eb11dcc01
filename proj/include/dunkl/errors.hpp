#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Raised when a function does not decay fast enough for a truncated
/// improper integral.
class DecayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a wavelet candidate fails the admissibility check.
class AdmissibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a hypothesis on a wavelet profile is violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two objects that must share a grid do not.
class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dunkl
