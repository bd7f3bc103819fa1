#pragma once

#include <stdexcept>
#include <string>

namespace oblique {

/// Argument outside the mathematical domain of an operation (also raised for
/// NaN and infinite inputs).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double error_estimate)
      : std::runtime_error(what), error_estimate_(error_estimate) {}

  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

/// Root finder could not bracket or resolve a root.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A complex-branch closed form produced a non-negligible imaginary part.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace oblique
