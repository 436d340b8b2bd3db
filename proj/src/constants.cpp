#include "hardy/constants.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "hardy/errors.hpp"

namespace hardy {
namespace {

constexpr double kLn2 = std::numbers::ln2;
const double kLnPi = std::log(std::numbers::pi);

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(fmt::format("log_gamma requires a finite positive argument, got {}", x));
  return std::lgamma(x);
}

double riesz_normalization(int dimension, double alpha) {
  if (dimension < 1 || !(alpha > 0.0) || !(alpha < dimension))
    throw DomainError(fmt::format("riesz_normalization: alpha must lie in (0, N), got N={} alpha={}",
                                  dimension, alpha));
  const double n = dimension;
  return std::exp(log_gamma(0.5 * (n - alpha)) - alpha * kLn2 - 0.5 * n * kLnPi -
                  log_gamma(0.5 * alpha));
}

double seminorm_normalization(int dimension, double s) {
  if (dimension < 1 || !(s > 0.0) || !(s < 2.0))
    throw DomainError(fmt::format("seminorm_normalization: s must lie in (0, 2), got {}", s));
  const double n = dimension;
  return s * std::exp(log_gamma(0.5 * (n + s)) - (2.0 - s) * kLn2 - 0.5 * n * kLnPi -
                      log_gamma(1.0 - 0.5 * s));
}

double sharp_constant(const InequalityParams& params) {
  const double n = params.dimension();
  const double a = params.alpha();
  const double s = params.s();
  const double log_ratio = log_gamma(0.25 * (n - s)) + log_gamma(0.25 * (n - a)) -
                           log_gamma(0.25 * (n + s)) - log_gamma(0.25 * (n + a));
  return std::exp(-(a + s) * kLn2 + 2.0 * log_ratio);
}

double l2_sharp_constant(int dimension, double alpha) {
  const InequalityParams params(dimension, alpha, 0.0);
  const double n = dimension;
  return std::exp(-alpha * kLn2 +
                  2.0 * (log_gamma(0.25 * (n - alpha)) - log_gamma(0.25 * (n + alpha))));
}

double gradient_sharp_constant(int dimension, double alpha) {
  const InequalityParams params(dimension, alpha, 2.0);
  const double n = dimension;
  return std::exp((2.0 - alpha) * kLn2 + 2.0 * (log_gamma(0.25 * (n - alpha)) -
                                                std::log(n - 2.0) -
                                                log_gamma(0.25 * (n + alpha))));
}

double fractional_hardy_constant(int dimension, double s) {
  if (dimension < 1 || !(s > 0.0) || !(s < 2.0) || !(s < dimension))
    throw DomainError(
        fmt::format("fractional_hardy_constant: need 0 < s < min(2, N), got N={} s={}", dimension, s));
  const double n = dimension;
  return std::exp(-s * kLn2 + 2.0 * (log_gamma(0.25 * (n - s)) - log_gamma(0.25 * (n + s))));
}

double local_hardy_constant(int dimension) {
  if (dimension < 3)
    throw DomainError(fmt::format("local_hardy_constant requires N >= 3, got {}", dimension));
  const double h = 0.5 * (dimension - 2);
  return h * h;
}

double riesz_power_law_constant(int dimension, double alpha, double beta) {
  if (dimension < 1 || !(alpha > 0.0) || !(alpha < beta) || !(beta < dimension))
    throw DomainError(fmt::format(
        "riesz_power_law_constant: need 0 < alpha < beta < N, got N={} alpha={} beta={}", dimension,
        alpha, beta));
  const double n = dimension;
  return std::exp(-alpha * kLn2 + log_gamma(0.5 * (beta - alpha)) + log_gamma(0.5 * (n - beta)) -
                  log_gamma(0.5 * beta) - log_gamma(0.5 * (n - beta + alpha)));
}

double sphere_area(int dimension) {
  if (dimension < 1) throw DomainError("sphere_area requires N >= 1");
  if (dimension == 1) return 2.0;
  const double n = dimension;
  return 2.0 * std::exp(0.5 * n * kLnPi - log_gamma(0.5 * n));
}

}  // namespace hardy
