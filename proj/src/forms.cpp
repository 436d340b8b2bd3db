#include "hardy/forms.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "hardy/constants.hpp"
#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"

namespace hardy {
namespace {

void reject_pure_power(const RadialProfile& phi, const char* form) {
  if (phi.is_pure_power())
    throw DomainError(fmt::format("{} diverges for the pure power {}", form, phi.describe()));
}

bool compact(const RadialProfile& phi) { return std::isfinite(phi.support_end()); }

Decay profile_tail(const RadialProfile& phi) { return compact(phi) ? Decay::none() : Decay::exponential(); }

// Origin exponent of an integrand behaving like r^{base} phi(r)^k; vanishing profiles need no treatment.
double origin_exponent(const RadialProfile& phi, double base, double k = 2.0) {
  const double order = phi.origin_order();
  if (std::isinf(order)) return 1.0;
  return base + k * order;
}

FormValue scaled(const QuadResult& q, double factor, Route route) {
  return {q.value * factor, q.err_estimate * std::abs(factor), route};
}

FormValue zero(Route route) { return {0.0, 0.0, route}; }

}  // namespace

std::string_view route_name(Route route) {
  switch (route) {
    case Route::double_integral:
      return "double_integral";
    case Route::fourier:
      return "fourier";
    case Route::radial_1d:
      return "radial_1d";
  }
  return "unknown";
}

FormValue weighted_l2(const RadialProfile& phi, int dimension, double s, const QuadratureSpec& spec) {
  reject_pure_power(phi, "weighted L2 norm");
  if (dimension < 1) throw DomainError(fmt::format("dimension must be >= 1, got {}", dimension));
  if (!(s >= 0.0) || !(s < dimension))
    throw DomainError(fmt::format("|x|^-{} is not locally integrable in dimension {}", s, dimension));
  if (phi.is_zero()) return zero(Route::radial_1d);
  const double e = dimension - 1 - s;
  auto f = [&](double r) {
    const double v = phi.eval(r);
    return v * v * std::pow(r, e);
  };
  const RadialLayout layout{phi.breakpoints(), origin_exponent(phi, e), profile_tail(phi)};
  return scaled(integrate_radial(f, layout, spec), sphere_area(dimension), Route::radial_1d);
}

FormValue l2_norm_sq(const RadialProfile& phi, int dimension, const QuadratureSpec& spec) {
  return weighted_l2(phi, dimension, 0.0, spec);
}

FormValue gradient_form(const RadialProfile& phi, int dimension, const QuadratureSpec& spec) {
  reject_pure_power(phi, "gradient form");
  if (dimension < 1) throw DomainError(fmt::format("dimension must be >= 1, got {}", dimension));
  if (phi.is_zero()) return zero(Route::radial_1d);
  auto f = [&](double r) {
    const double d = phi.eval_derivative(r);
    return d * d * std::pow(r, dimension - 1);
  };
  // Smooth even profiles have phi'(r) ~ r at the origin.
  const RadialLayout layout{phi.breakpoints(), origin_exponent(phi, dimension + 1.0, 0.0), profile_tail(phi)};
  return scaled(integrate_radial(f, layout, spec), sphere_area(dimension), Route::radial_1d);
}

FormValue local_hardy_remainder(const RadialProfile& phi, int dimension, const QuadratureSpec& spec) {
  reject_pure_power(phi, "local Hardy remainder");
  if (dimension < 2) throw DomainError(fmt::format("local Hardy remainder needs N >= 2, got {}", dimension));
  if (phi.is_zero()) return zero(Route::radial_1d);
  const double p = 0.5 * (dimension - 2);
  auto f = [&](double r) {
    const double d = phi.weighted_derivative(p, r);
    return d * d * r;
  };
  const double base = p == 0.0 ? 3.0 : 2.0 * p - 1.0;
  const RadialLayout layout{phi.breakpoints(), origin_exponent(phi, base, 0.0), profile_tail(phi)};
  return scaled(integrate_radial(f, layout, spec), sphere_area(dimension), Route::radial_1d);
}

FormValue stein_weiss_form(const RadialProfile& phi, const InequalityParams& params, const QuadratureSpec& spec) {
  reject_pure_power(phi, "weighted Riesz form");
  if (phi.is_zero()) return zero(Route::double_integral);
  const int n = params.dimension();
  const double a = 0.5 * (params.alpha() + params.s());
  const double w = n - 1 - a;
  const AngularKernel kernel = AngularKernel::riesz(n, params.alpha());
  auto F = [&](double r, double rho, double delta) -> Sample {
    const double fr = phi.eval(r);
    const double fp = phi.eval(rho);
    if (fr == 0.0 || fp == 0.0) return {};
    return {fr * fp * std::pow(r * rho, w) * angular_average(kernel, r, rho, delta, spec), 0.0};
  };
  DiagonalLayout layout;
  layout.breakpoints = phi.breakpoints();
  layout.diag_exponent = -kernel.diag_order();
  layout.origin_exponent = origin_exponent(phi, std::min(w, n - 1 - params.s()), 1.0);
  layout.inner_tail = profile_tail(phi);
  layout.outer_tail = profile_tail(phi);
  return scaled(integrate_diagonal_singular_2d(F, layout, spec), sphere_area(n), Route::double_integral);
}

FormValue seminorm_double_integral(const RadialProfile& phi, int dimension, double s, const QuadratureSpec& spec) {
  reject_pure_power(phi, "fractional seminorm");
  const AngularKernel kernel = AngularKernel::seminorm(dimension, s);
  if (phi.is_zero()) return zero(Route::double_integral);
  const int n = dimension;
  auto F = [&](double r, double rho, double delta) -> Sample {
    const double d = phi.difference(r, rho, delta);
    if (d == 0.0) return {};
    return {d * d * std::pow(r * rho, n - 1) * angular_average(kernel, r, rho, delta, spec), 0.0};
  };
  DiagonalLayout layout;
  layout.breakpoints = phi.breakpoints();
  layout.diag_exponent = 2.0 - kernel.diag_order();
  layout.origin_exponent = n - 1.0;
  layout.inner_tail = Decay::algebraic(1.0 + s);
  layout.outer_tail = profile_tail(phi);
  return scaled(integrate_diagonal_singular_2d(F, layout, spec), sphere_area(n), Route::double_integral);
}

FormValue fractional_seminorm(const RadialProfile& phi, int dimension, double s, Route route,
                              const QuadratureSpec& spec) {
  reject_pure_power(phi, "fractional seminorm");
  const double d = seminorm_normalization(dimension, s);
  if (route == Route::double_integral) {
    const FormValue raw = seminorm_double_integral(phi, dimension, s, spec);
    return {raw.value * d, raw.err_estimate * d, Route::double_integral};
  }
  if (route != Route::fourier) throw UnsupportedError(fmt::format("route {} is not a seminorm route", route_name(route)));
  const auto* g = std::get_if<Gaussian>(&phi.shape());
  if (!g) throw UnsupportedError(fmt::format("Fourier route needs a Gaussian profile, got {}", phi.describe()));
  if (!(s > 0.0 && s < 2.0)) throw DomainError(fmt::format("seminorm order must lie in (0, 2), got {}", s));
  // |phi^(xi)|^2 = A^2 w^{2N} exp(-w^2 |xi|^2) for phi = A exp(-|x|^2 / (2 w^2)).
  const double width = g->sigma * phi.scale();
  const double n = dimension;
  const double value = phi.amplitude() * phi.amplitude() * std::pow(width, n - s) * std::pow(std::numbers::pi, n / 2.0) *
                       std::exp(log_gamma((n + s) / 2.0) - log_gamma(n / 2.0));
  return {value, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(value), Route::fourier};
}

FormValue riesz_remainder(const RadialProfile& phi, const InequalityParams& params, double p,
                          const QuadratureSpec& spec) {
  reject_pure_power(phi, "Riesz remainder");
  if (phi.is_zero()) return zero(Route::double_integral);
  const int n = params.dimension();
  const double alpha = params.alpha();
  const double w = 0.5 * (n - alpha) - 1.0;
  const AngularKernel kernel = AngularKernel::riesz(n, alpha);
  auto F = [&](double r, double rho, double delta) -> Sample {
    const double d = phi.weighted_difference(p, r, rho, delta);
    if (d == 0.0) return {};
    return {d * d * std::pow(r * rho, w) * angular_average(kernel, r, rho, delta, spec), 0.0};
  };
  DiagonalLayout layout;
  layout.breakpoints = phi.breakpoints();
  layout.diag_exponent = 2.0 - kernel.diag_order();
  layout.origin_exponent = std::min(w, origin_exponent(phi, 2.0 * p - 1.0));
  layout.inner_tail = Decay::algebraic(1.0 + 0.5 * (n - alpha));
  layout.outer_tail = profile_tail(phi);
  if (!(layout.origin_exponent > -1.0))
    throw DomainError(fmt::format("Riesz remainder with exponent {} diverges at the origin for {}", p, phi.describe()));
  return scaled(integrate_diagonal_singular_2d(F, layout, spec), 0.5 * sphere_area(n), Route::double_integral);
}

FormValue fractional_remainder(const RadialProfile& phi, int dimension, double s, const QuadratureSpec& spec) {
  reject_pure_power(phi, "fractional remainder");
  const AngularKernel kernel = AngularKernel::seminorm(dimension, s);
  if (!(s < dimension)) throw DomainError(fmt::format("seminorm order {} must be below N = {}", s, dimension));
  if (phi.is_zero()) return zero(Route::double_integral);
  const int n = dimension;
  const double p = 0.5 * (n - s);
  const double w = 0.5 * (n + s) - 1.0;
  auto F = [&](double r, double rho, double delta) -> Sample {
    const double d = phi.weighted_difference(p, r, rho, delta);
    if (d == 0.0) return {};
    return {d * d * std::pow(r * rho, w) * angular_average(kernel, r, rho, delta, spec), 0.0};
  };
  DiagonalLayout layout;
  layout.breakpoints = phi.breakpoints();
  layout.diag_exponent = 2.0 - kernel.diag_order();
  layout.origin_exponent = std::min(w, origin_exponent(phi, 2.0 * p - 1.0));
  layout.inner_tail = Decay::algebraic(1.0 + 0.5 * (n + s));
  layout.outer_tail = profile_tail(phi);
  return scaled(integrate_diagonal_singular_2d(F, layout, spec), sphere_area(n), Route::double_integral);
}

}  // namespace hardy
