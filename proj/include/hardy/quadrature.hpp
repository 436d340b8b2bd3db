#pragma once

#include <functional>
#include <vector>

namespace hardy {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  /// Half-width of the near-diagonal band, relative to the radius.
  double diagonal_band_width = 0.1;

  /// Throws DomainError if any field is out of range.
  void validate() const;
  /// Same spec with rel_tol and abs_tol multiplied by factor.
  QuadratureSpec tightened(double factor) const;
};

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  /// False when the subdivision budget ran out or intervals became too narrow to split.
  bool converged = true;
  int evaluations = 0;
};

/// An integrand value together with an absolute error already carried by it
/// (for instance the error of an inner integral). Carried errors are integrated
/// alongside the value and added to the final estimate.
struct Sample {
  double value = 0.0;
  double err = 0.0;
};

using Integrand = std::function<double(double)>;
using SampledIntegrand = std::function<Sample(double)>;
/// f(x, x - a, b - x): the distances to both endpoints are passed without cancellation.
using EndpointIntegrand = std::function<double(double, double, double)>;
/// f(rho, delta) with delta = rho - r for a fixed centre r.
using CentredIntegrand = std::function<Sample(double, double)>;
/// F(r, rho, delta) with delta = rho - r.
using PairIntegrand = std::function<Sample(double, double, double)>;

/// Endpoint singularity markers. An exponent e means f(x) ~ |x - endpoint|^e (e > -1);
/// log-type singularities are covered by any e slightly below the true power.
struct EndpointFlags {
  bool left = false;
  bool right = false;
  double left_exponent = -0.5;
  double right_exponent = -0.5;

  static EndpointFlags none() { return {}; }
  static EndpointFlags at_left(double exponent = -0.5) { return {true, false, exponent, -0.5}; }
  static EndpointFlags at_right(double exponent = -0.5) { return {false, true, -0.5, exponent}; }
  static EndpointFlags both(double left_exponent = -0.5, double right_exponent = -0.5) {
    return {true, true, left_exponent, right_exponent};
  }
};

/// Behaviour of an integrand at infinity.
struct Decay {
  enum class Kind { none, algebraic, exponential };
  Kind kind = Kind::exponential;
  /// f(x) ~ x^{-rate} for algebraic decay; rate must exceed 1.
  double rate = 0.0;

  /// The integrand vanishes beyond the last breakpoint.
  static Decay none() { return {Kind::none, 0.0}; }
  static Decay algebraic(double rate) { return {Kind::algebraic, rate}; }
  static Decay exponential() { return {Kind::exponential, 0.0}; }
};

/// Shape information for an integral over (0, inf).
struct RadialLayout {
  /// Points where the integrand changes scale or loses smoothness.
  std::vector<double> breakpoints;
  /// f(r) ~ r^{origin_exponent} as r -> 0.
  double origin_exponent = 0.0;
  Decay tail = Decay::exponential();
};

/// Shape information for a double integral over (0, inf)^2 with a diagonal singularity.
struct DiagonalLayout {
  std::vector<double> breakpoints;
  /// F(r, rho) ~ |rho - r|^{diag_exponent} near the diagonal (net of any vanishing factor).
  double diag_exponent = 0.0;
  /// Behaviour of the outer integrand r -> int F(r, rho) drho at the origin.
  double origin_exponent = 0.0;
  /// F(r, rho) ~ rho^{inner_origin_exponent} as rho -> 0 (only used by Half::lower).
  double inner_origin_exponent = 0.0;
  /// Decay of F in rho for fixed r.
  Decay inner_tail = Decay::exponential();
  /// Decay of the outer integrand in r.
  Decay outer_tail = Decay::exponential();
};

enum class Sides { both, right, left };

/// Which half of the square the nested integral sweeps; the other half is recovered by symmetry.
enum class Half { upper, lower };

enum class OnFailure { raise, best_effort };

/// Adaptive 15/7-point Gauss-Kronrod integration on [a, b]. Flagged endpoints are
/// removed by the substitution x = a + (b - a) v^k with k chosen from the exponent.
QuadResult integrate_1d(const Integrand& f, double a, double b, EndpointFlags flags = {},
                        const QuadratureSpec& spec = {});
QuadResult integrate_1d(const SampledIntegrand& f, double a, double b, EndpointFlags flags,
                        const QuadratureSpec& spec, OnFailure on_failure = OnFailure::raise);

/// Variant for integrands singular at the right endpoint: with Integrand alone, b - x
/// cannot be resolved below the spacing of doubles near b.
QuadResult integrate_1d(const EndpointIntegrand& f, double a, double b, EndpointFlags flags,
                        const QuadratureSpec& spec = {});

/// Integral over (a, inf). Algebraic decay maps x = a + L(1/t - 1), exponential decay
/// maps x = a - L ln t, both onto t in (0, 1], with L = a (or 1 when a = 0).
QuadResult integrate_semi_infinite(const Integrand& f, double a, Decay decay, const QuadratureSpec& spec = {});

/// Integral over (0, inf) split at the layout breakpoints into an origin piece,
/// logarithmic-variable interior pieces and a tail. All pieces share one error budget.
QuadResult integrate_radial(const SampledIntegrand& f, const RadialLayout& layout, const QuadratureSpec& spec,
                            OnFailure on_failure = OnFailure::raise);
QuadResult integrate_radial(const Integrand& f, const RadialLayout& layout, const QuadratureSpec& spec = {});

/// Integral over rho in (0, inf) of f(rho, rho - r), singular like |rho - r|^{diag_exponent}.
/// Near the diagonal the relative variable u = |rho - r| / r is used, on a band of
/// width spec.diagonal_band_width; sides restricts to rho > r or rho < r.
QuadResult integrate_radial_about(const CentredIntegrand& f, double r, double diag_exponent,
                                  const RadialLayout& layout, const QuadratureSpec& spec, Sides sides = Sides::both,
                                  OnFailure on_failure = OnFailure::raise);

/// Integral of a symmetric F over (0, inf)^2, computed as twice the integral over one
/// half (inner rho, outer r). Spot-checks symmetry and throws DomainError on violation.
QuadResult integrate_diagonal_singular_2d(const PairIntegrand& F, const DiagonalLayout& layout,
                                          const QuadratureSpec& spec = {}, Half half = Half::upper);

}  // namespace hardy
