#pragma once

#include "hardy/quadrature.hpp"
#include "hardy/radial.hpp"

namespace hardy {

/// normalization * |x - y|^{-exponent}, to be averaged over relative angles.
class AngularKernel {
 public:
  AngularKernel(int dimension, double exponent, double normalization = 1.0);

  /// A_alpha |x - y|^{-(N - alpha)}.
  static AngularKernel riesz(int dimension, double alpha);
  /// |x - y|^{-(N + s)}, without the seminorm normalization.
  static AngularKernel seminorm(int dimension, double s);

  int dimension() const noexcept { return dimension_; }
  double exponent() const noexcept { return exponent_; }
  double normalization() const noexcept { return normalization_; }

  /// The average behaves like |r - r2|^{-diag_order} near the diagonal
  /// (logarithmically at 0, bounded when negative): 1 - alpha for Riesz, 1 + s for the seminorm.
  double diag_order() const noexcept { return exponent_ - (dimension_ - 1); }

 private:
  int dimension_;
  double exponent_;
  double normalization_;
};

/// normalization * |S^{N-2}| * int_0^pi (r^2 + r2^2 - 2 r r2 cos t)^{-exponent/2} sin^{N-2} t dt,
/// and normalization * (|r - r2|^{-exponent} + (r + r2)^{-exponent}) for N = 1.
/// Closed forms are used for N = 1 and N = 3, adaptive quadrature otherwise.
double angular_average(const AngularKernel& kernel, double r, double r2, const QuadratureSpec& spec = {});

/// Same, with the gap |r2 - r| supplied separately so that near-diagonal values keep full precision.
double angular_average(const AngularKernel& kernel, double r, double r2, double gap, const QuadratureSpec& spec);

/// A radial function known through samples plus the layout information the integrator needs.
struct RadialSource {
  SampledIntegrand value;
  std::vector<double> breakpoints;
  /// g(r) ~ r^{origin_order} at the origin.
  double origin_order = 0.0;
  /// Decay of g itself; algebraic(m) means g(r) ~ r^{-m}.
  Decay decay = Decay::exponential();
};

/// (I_alpha * f)(|x| = r) for radial f given as a profile.
QuadResult riesz_radial_potential(const RadialProfile& f, double alpha, double r, int dimension,
                                  const QuadratureSpec& spec = {});

/// (I_alpha * g)(|x| = r) for a radial source; used for nested convolutions.
QuadResult riesz_radial_potential(const RadialSource& g, double alpha, double r, int dimension,
                                  const QuadratureSpec& spec = {}, OnFailure on_failure = OnFailure::raise);

/// Source description of a closed-form profile.
RadialSource as_source(const RadialProfile& f);

}  // namespace hardy
