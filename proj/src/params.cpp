#include "hardy/params.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hardy/errors.hpp"

namespace hardy {

InequalityParams::InequalityParams(int dimension, double alpha, double s)
    : dimension_(dimension), alpha_(alpha), s_(s) {
  if (dimension < 1)
    throw DomainError(fmt::format("dimension must be >= 1, got {}", dimension));
  if (!std::isfinite(alpha) || !(alpha > 0.0) || !(alpha < dimension))
    throw DomainError(fmt::format("alpha must lie in (0, {}), got {}", dimension, alpha));
  if (!std::isfinite(s) || s < 0.0 || s > 2.0)
    throw DomainError(fmt::format("s must lie in [0, 2], got {}", s));
  if (!(s < dimension))
    throw DomainError(fmt::format("s must be smaller than N = {}, got {}", dimension, s));
}

std::string InequalityParams::describe() const {
  return fmt::format("N={} alpha={} s={}", dimension_, alpha_, s_);
}

}  // namespace hardy
