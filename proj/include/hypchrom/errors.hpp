#pragma once

#include <stdexcept>
#include <string>

namespace hypchrom {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature did not reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity violates a runtime-checked condition (for example a
/// non-negative spectral minimum or a failed tail scan).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input too large for an exhaustive algorithm.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace hypchrom
