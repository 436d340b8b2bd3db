#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hardy/params.hpp"

namespace hardy {

/// Fixed cutoff eta: equal to 1 on (0, 1], 0 on [2, inf), cubic smoothstep in between
/// (eta(t) = 1 - 3u^2 + 2u^3, u = t - 1), hence C^1 on (0, inf).
struct Cutoff {
  static double value(double t) noexcept;
  static double derivative(double t) noexcept;
  /// eta(t1) - eta(t2), with dt = t1 - t2 supplied by the caller to avoid cancellation.
  static double difference(double t1, double t2, double dt) noexcept;
};

/// r -> r^{-exponent}.
struct PurePower {
  double exponent;
};

/// r -> eta(r/lambda) eta(1/(lambda r)) r^{-exponent}; supported on [1/(2 lambda), 2 lambda].
struct TruncatedPower {
  double exponent;
  double lambda;
};

/// r -> exp(-r^2 / (2 sigma^2)).
struct Gaussian {
  double sigma;
};

/// r -> (1 - r^2/4)^2 on [0, 2), 0 beyond. C^1, even, compactly supported.
struct Bump {};

using ProfileShape = std::variant<PurePower, TruncatedPower, Gaussian, Bump>;

/// Closed-form radial function phi(r) = amplitude * shape(r / scale).
///
/// All methods take r > 0 and throw DomainError otherwise. The "weighted" family
/// evaluates psi(r) = r^p phi(r), which is what the groundstate remainders need;
/// for power-law shapes the power is combined analytically so that r^q * r^{-q}
/// never goes through floating point.
class RadialProfile {
 public:
  explicit RadialProfile(ProfileShape shape, double amplitude = 1.0, double scale = 1.0);

  static RadialProfile pure_power(double exponent);
  static RadialProfile truncated_power(double exponent, double lambda);
  static RadialProfile gaussian(double sigma = 1.0);
  static RadialProfile bump();

  /// Parses "gaussian:1", "bump", "power:2", "truncated:1.5,10", optionally followed by
  /// ";amplitude=A" and/or ";scale=T".
  static RadialProfile parse(std::string_view descriptor);

  const ProfileShape& shape() const noexcept { return shape_; }
  double amplitude() const noexcept { return amplitude_; }
  double scale() const noexcept { return scale_; }

  /// phi(r / t) as a new profile.
  RadialProfile dilated(double t) const;
  /// c * phi as a new profile.
  RadialProfile multiplied(double c) const;

  double eval(double r) const;
  double eval_derivative(double r) const;

  /// psi(r) = r^p phi(r).
  double weighted(double p, double r) const;
  /// d/dr [r^p phi(r)].
  double weighted_derivative(double p, double r) const;
  /// psi(r) - psi(rho), where delta = rho - r is passed separately so that nearly
  /// coincident radii keep full relative precision.
  double weighted_difference(double p, double r, double rho, double delta) const;
  double difference(double r, double rho, double delta) const {
    return weighted_difference(0.0, r, rho, delta);
  }

  /// Radii where the profile has derivative jumps or changes its decay scale.
  std::vector<double> breakpoints() const;
  /// Leading power at the origin: phi(r) ~ r^order. +inf when phi vanishes near 0.
  double origin_order() const;
  /// End of the support (+inf when not compactly supported).
  double support_end() const;

  bool is_pure_power() const noexcept { return std::holds_alternative<PurePower>(shape_); }
  bool is_gaussian() const noexcept { return std::holds_alternative<Gaussian>(shape_); }
  bool is_zero() const noexcept { return amplitude_ == 0.0; }

  /// Exponent q when the shape is a (pure or truncated) power law.
  double power_exponent() const;

  std::string describe() const;

 private:
  ProfileShape shape_;
  double amplitude_;
  double scale_;
};

/// The extremizing family: TruncatedPower with exponent (N - s)/2 (lambda >= 1).
RadialProfile u_lambda(const InequalityParams& params, double lambda);

/// r^e - rho^e for positive radii, given delta = rho - r.
double power_difference(double e, double r, double rho, double delta);

}  // namespace hardy
