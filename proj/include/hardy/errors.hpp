#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Raised when an argument lies outside the mathematical domain of an operation
/// (inadmissible parameters, divergent integrals detected analytically, poles).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a route or profile family is not supported by an evaluation path.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature ran out of subdivisions. Carries the best estimate so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best_estimate, double achieved_error)
      : std::runtime_error(what), best_estimate_(best_estimate), achieved_error_(achieved_error) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double best_estimate_;
  double achieved_error_;
};

}  // namespace hardy
