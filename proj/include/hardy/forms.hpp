#pragma once

#include <string_view>

#include "hardy/params.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/radial.hpp"

namespace hardy {

enum class Route { double_integral, fourier, radial_1d };

std::string_view route_name(Route route);

struct FormValue {
  double value = 0.0;
  double err_estimate = 0.0;
  Route route = Route::radial_1d;
};

// All forms take radial profiles on R^N and reduce to one- or two-dimensional radial
// integrals. Pure power laws make every form diverge and are rejected with DomainError.

/// int int phi(x) |x|^{-(alpha+s)/2} I_alpha(x - y) |y|^{-(alpha+s)/2} phi(y) dx dy.
FormValue stein_weiss_form(const RadialProfile& phi, const InequalityParams& params, const QuadratureSpec& spec = {});

/// int |phi|^2.
FormValue l2_norm_sq(const RadialProfile& phi, int dimension, const QuadratureSpec& spec = {});

/// int |phi(x)|^2 |x|^{-s} dx, 0 <= s < N.
FormValue weighted_l2(const RadialProfile& phi, int dimension, double s, const QuadratureSpec& spec = {});

/// int |grad phi|^2.
FormValue gradient_form(const RadialProfile& phi, int dimension, const QuadratureSpec& spec = {});

/// int int |phi(x) - phi(y)|^2 |x - y|^{-(N+s)} dx dy, without normalization.
FormValue seminorm_double_integral(const RadialProfile& phi, int dimension, double s,
                                   const QuadratureSpec& spec = {});

/// D_{N,s} times the double integral above, or int |xi|^s |phi^(xi)|^2 d xi through the
/// Gaussian transform pair (Route::fourier, Gaussians only).
FormValue fractional_seminorm(const RadialProfile& phi, int dimension, double s, Route route,
                              const QuadratureSpec& spec = {});

/// (1/2) int int I_alpha(x - y) |x|^{-(N+alpha)/2} |y|^{-(N+alpha)/2} |psi(x) - psi(y)|^2 dx dy
/// with psi(x) = |x|^p phi(x). Integrated directly, never by expanding the square.
FormValue riesz_remainder(const RadialProfile& phi, const InequalityParams& params, double p,
                          const QuadratureSpec& spec = {});

/// int int |psi(x) - psi(y)|^2 / (|x|^p |x - y|^{N+s} |y|^p) dx dy with p = (N - s)/2
/// and psi(x) = |x|^p phi(x), without normalization.
FormValue fractional_remainder(const RadialProfile& phi, int dimension, double s, const QuadratureSpec& spec = {});

/// int |grad(|x|^{(N-2)/2} phi(x))|^2 |x|^{-(N-2)} dx, N >= 2.
FormValue local_hardy_remainder(const RadialProfile& phi, int dimension, const QuadratureSpec& spec = {});

}  // namespace hardy
