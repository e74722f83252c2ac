#pragma once

#include <stdexcept>

namespace rapidity {

/// Malformed data: NaN/infinite inputs, non-positive scale parameters,
/// out-of-range counts. Distinct from DomainError ("outside physics").
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Value outside the mathematical domain of the operation
/// (|v| >= c for the open carrier, the excluded pairs uv = -c^2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result not representable as a finite real.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An iterative routine exhausted its budget before reaching the
/// requested accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An aggregate operation was handed an empty sequence.
class EmptyInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rapidity
