#include "hardy/kernels.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "hardy/constants.hpp"
#include "hardy/errors.hpp"

namespace hardy {
namespace {

// ((r + r2)^q - gap^q) / q without cancellation; the q -> 0 limit is the logarithm.
double power_span(double q, double small, double gap) {
  const double l = std::log1p(2.0 * small / gap);
  if (q == 0.0) return l;
  return std::pow(gap, q) * std::expm1(q * l) / q;
}

double sphere_average_quadrature(int n, double gamma, double r, double r2, double gap, const QuadratureSpec& spec) {
  const double rr = r * r2;
  const double gap2 = gap * gap;
  const int m = n - 2;
  auto f = [=](double t) {
    const double s = std::sin(0.5 * t);
    const double base = gap2 + 4.0 * rr * s * s;
    return std::pow(base, -0.5 * gamma) * (m == 0 ? 1.0 : std::pow(std::sin(t), m));
  };
  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 0.1, 1e-14);
  inner.abs_tol = 1e-300;
  const double pi = std::numbers::pi;
  if (gap == 0.0) {
    if (!(gamma < n - 1))
      throw DomainError(fmt::format("angular average of |x-y|^-{} diverges on the diagonal in dimension {}", gamma, n));
    return integrate_1d(f, 0.0, pi, EndpointFlags::at_left(m - gamma), inner).value;
  }
  // Geometric pieces resolve the peak of width gap / sqrt(r r2) at t = 0.
  double sum = 0.0;
  double lo = 0.0;
  double hi = std::min(gap / std::sqrt(rr), pi);
  while (true) {
    sum += integrate_1d(f, lo, hi, EndpointFlags::none(), inner).value;
    if (hi >= pi) break;
    lo = hi;
    hi = std::min(4.0 * hi, pi);
  }
  return sum;
}

}  // namespace

AngularKernel::AngularKernel(int dimension, double exponent, double normalization)
    : dimension_(dimension), exponent_(exponent), normalization_(normalization) {
  if (dimension < 1) throw DomainError(fmt::format("dimension must be >= 1, got {}", dimension));
  if (!(exponent > 0.0) || !std::isfinite(exponent))
    throw DomainError(fmt::format("kernel exponent must be positive, got {}", exponent));
  if (!(normalization > 0.0)) throw DomainError("kernel normalization must be positive");
}

AngularKernel AngularKernel::riesz(int dimension, double alpha) {
  return AngularKernel(dimension, dimension - alpha, riesz_normalization(dimension, alpha));
}

AngularKernel AngularKernel::seminorm(int dimension, double s) {
  if (!(s > 0.0 && s < 2.0)) throw DomainError(fmt::format("seminorm order must lie in (0, 2), got {}", s));
  return AngularKernel(dimension, dimension + s, 1.0);
}

double angular_average(const AngularKernel& kernel, double r, double r2, const QuadratureSpec& spec) {
  return angular_average(kernel, r, r2, std::abs(r2 - r), spec);
}

double angular_average(const AngularKernel& kernel, double r, double r2, double gap, const QuadratureSpec& spec) {
  if (!(r > 0.0) || !(r2 > 0.0)) throw DomainError(fmt::format("radii must be positive, got {} and {}", r, r2));
  const int n = kernel.dimension();
  const double gamma = kernel.exponent();
  gap = std::abs(gap);
  if (gap == 0.0 && kernel.diag_order() >= 0.0)
    throw DomainError(fmt::format("angular average has a pole at r = r2 = {}", r));
  double value;
  if (n == 1) {
    value = std::pow(gap, -gamma) + std::pow(r + r2, -gamma);
  } else if (n == 3) {
    const double q = 2.0 - gamma;
    if (gap == 0.0)
      value = 2.0 * std::numbers::pi * std::pow(2.0 * r, q) / (q * r * r);
    else
      value = 2.0 * std::numbers::pi * power_span(q, std::min(r, r2), gap) / (r * r2);
  } else {
    value = sphere_area(n - 1) * sphere_average_quadrature(n, gamma, r, r2, gap, spec);
  }
  return kernel.normalization() * value;
}

RadialSource as_source(const RadialProfile& f) {
  RadialSource src;
  src.value = [f](double r) { return Sample{f.eval(r), 0.0}; };
  src.breakpoints = f.breakpoints();
  src.origin_order = std::isinf(f.origin_order()) ? 0.0 : f.origin_order();
  if (f.is_pure_power())
    src.decay = Decay::algebraic(f.power_exponent());
  else if (std::isfinite(f.support_end()))
    src.decay = Decay::none();
  else
    src.decay = Decay::exponential();
  return src;
}

QuadResult riesz_radial_potential(const RadialProfile& f, double alpha, double r, int dimension,
                                  const QuadratureSpec& spec) {
  if (f.is_pure_power()) {
    const double beta = f.power_exponent();
    if (!(beta > alpha))
      throw DomainError(fmt::format("I_{} of |x|^-{} diverges at infinity", alpha, beta));
    if (!(beta < dimension))
      throw DomainError(fmt::format("|x|^-{} is not locally integrable in dimension {}", beta, dimension));
  }
  return riesz_radial_potential(as_source(f), alpha, r, dimension, spec);
}

QuadResult riesz_radial_potential(const RadialSource& g, double alpha, double r, int dimension,
                                  const QuadratureSpec& spec, OnFailure on_failure) {
  const AngularKernel kernel = AngularKernel::riesz(dimension, alpha);
  const double origin = dimension - 1 + g.origin_order;
  if (!(origin > -1.0)) throw DomainError("radial source is not locally integrable at the origin");
  Decay tail = g.decay;
  if (tail.kind == Decay::Kind::algebraic) {
    if (!(tail.rate > alpha)) throw DomainError(fmt::format("I_{} diverges for a source decaying like r^-{}", alpha, tail.rate));
    tail = Decay::algebraic(tail.rate + 1.0 - alpha);
  }
  const int n = dimension;
  auto integrand = [&](double rho, double delta) -> Sample {
    const Sample v = g.value(rho);
    if (v.value == 0.0 && v.err == 0.0) return {};
    const double w = angular_average(kernel, r, rho, delta, spec) * std::pow(rho, n - 1);
    return {v.value * w, v.err * w};
  };
  const RadialLayout layout{g.breakpoints, origin, tail};
  return integrate_radial_about(integrand, r, -kernel.diag_order(), layout, spec, Sides::both, on_failure);
}

}  // namespace hardy
