#include "hardy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include <fmt/format.h>

#include "hardy/errors.hpp"

namespace hardy {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// 15-point Kronrod abscissae and weights with the embedded 7-point Gauss weights.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  SampledIntegrand g;
  double lo;
  double hi;
};

struct Interval {
  double a;
  double b;
  double value;
  double err;
  double carried;
  int segment;
};

struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

Interval apply_rule(const Segment& seg, int index, double a, double b, int& evaluations) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv1[7], fv2[7];
  const Sample fc = seg.g(c);
  double resg = fc.value * kWg[3];
  double resk = fc.value * kWgk[7];
  double resabs = std::abs(resk);
  double carried = kWgk[7] * fc.err;
  bool finite = std::isfinite(fc.value);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const Sample f1 = seg.g(c - dx);
    const Sample f2 = seg.g(c + dx);
    fv1[j] = f1.value;
    fv2[j] = f2.value;
    finite = finite && std::isfinite(f1.value) && std::isfinite(f2.value);
    const double sum = f1.value + f2.value;
    resk += kWgk[j] * sum;
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
    resabs += kWgk[j] * (std::abs(f1.value) + std::abs(f2.value));
    carried += kWgk[j] * (f1.err + f2.err);
  }
  evaluations += 15;
  if (!finite)
    throw QuadratureError(fmt::format("integrand is not finite on [{}, {}]", a, b),
                          std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity());
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc.value - reskh);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  const double ah = std::abs(h);
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > kTiny / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  return {a, b, resk * h, err, carried * ah, index};
}

bool too_narrow(double a, double b) {
  const double c = 0.5 * (a + b);
  return !(c > a && c < b) || (b - a) <= 8.0 * kEps * std::max(std::abs(a), std::abs(b));
}

QuadResult run_adaptive(const std::vector<Segment>& segments, const QuadratureSpec& spec, OnFailure on_failure) {
  spec.validate();
  QuadResult result;
  std::vector<Interval> done;
  auto by_error = [](const Interval& x, const Interval& y) { return x.err < y.err; };
  std::priority_queue<Interval, std::vector<Interval>, decltype(by_error)> active(by_error);

  double total = 0.0;
  double total_err = 0.0;
  for (size_t i = 0; i < segments.size(); ++i) {
    if (!(segments[i].hi > segments[i].lo)) continue;
    Interval iv = apply_rule(segments[i], static_cast<int>(i), segments[i].lo, segments[i].hi, result.evaluations);
    total += iv.value;
    total_err += iv.err;
    active.push(iv);
  }

  auto recompute = [&] {
    Neumaier v;
    double e = 0.0;
    auto heap = active;
    while (!heap.empty()) {
      v.add(heap.top().value);
      e += heap.top().err;
      heap.pop();
    }
    for (const auto& iv : done) {
      v.add(iv.value);
      e += iv.err;
    }
    total = v.value();
    total_err = e;
  };

  int subdivisions = 0;
  bool converged = true;
  bool budget_exhausted = false;
  while (true) {
    if (subdivisions % 64 == 0) recompute();
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (total_err <= tol) break;
    if (active.empty()) {
      converged = false;
      break;
    }
    if (subdivisions >= spec.max_subdivisions) {
      converged = false;
      budget_exhausted = true;
      break;
    }
    Interval worst = active.top();
    active.pop();
    if (too_narrow(worst.a, worst.b)) {
      done.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment& seg = segments[worst.segment];
    Interval left = apply_rule(seg, worst.segment, worst.a, mid, result.evaluations);
    Interval right = apply_rule(seg, worst.segment, mid, worst.b, result.evaluations);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    active.push(left);
    active.push(right);
    ++subdivisions;
  }

  while (!active.empty()) {
    done.push_back(active.top());
    active.pop();
  }
  std::sort(done.begin(), done.end(), [](const Interval& x, const Interval& y) {
    return x.segment != y.segment ? x.segment < y.segment : x.a < y.a;
  });
  Neumaier v;
  double err = 0.0;
  double carried = 0.0;
  for (const auto& iv : done) {
    v.add(iv.value);
    err += iv.err;
    carried += iv.carried;
  }
  result.value = v.value();
  result.err_estimate = err + carried;
  result.converged = converged;
  if (budget_exhausted && on_failure == OnFailure::raise)
    throw QuadratureError(fmt::format("no convergence within {} subdivisions (estimate {}, error {})",
                                      spec.max_subdivisions, result.value, result.err_estimate),
                          result.value, result.err_estimate);
  return result;
}

double substitution_power(double exponent) {
  if (!(exponent > -1.0)) throw DomainError(fmt::format("endpoint exponent {} is not integrable", exponent));
  if (exponent >= 1.0) return 1.0;
  return std::clamp(2.0 / (exponent + 1.0), 1.0, 64.0);
}

// Offset t = len * v^k on v in [0, 1]; h receives the offset from the singular endpoint.
Segment power_offset(SampledIntegrand h, double len, double exponent) {
  const double k = substitution_power(exponent);
  if (k == 1.0) return {std::move(h), 0.0, len};
  return {[h = std::move(h), len, k](double v) -> Sample {
            const double vk1 = std::pow(v, k - 1.0);
            const double t = len * vk1 * v;
            if (!(t > 0.0)) return {};
            const double jac = k * len * vk1;
            const Sample s = h(t);
            return {s.value * jac, s.err * jac};
          },
          0.0, 1.0};
}

Segment power_from_left(SampledIntegrand f, double a, double b, double exponent) {
  if (substitution_power(exponent) == 1.0) return {std::move(f), a, b};
  return power_offset([f = std::move(f), a](double t) { return f(a + t); }, b - a, exponent);
}

Segment power_from_right(SampledIntegrand f, double a, double b, double exponent) {
  if (substitution_power(exponent) == 1.0) return {std::move(f), a, b};
  return power_offset([f = std::move(f), b](double t) { return f(b - t); }, b - a, exponent);
}

void add_flagged(std::vector<Segment>& out, const SampledIntegrand& f, double a, double b, EndpointFlags flags) {
  if (flags.left && flags.right) {
    const double mid = 0.5 * (a + b);
    out.push_back(power_from_left(f, a, mid, flags.left_exponent));
    out.push_back(power_from_right(f, mid, b, flags.right_exponent));
  } else if (flags.left) {
    out.push_back(power_from_left(f, a, b, flags.left_exponent));
  } else if (flags.right) {
    out.push_back(power_from_right(f, a, b, flags.right_exponent));
  } else {
    out.push_back({f, a, b});
  }
}

// Interior piece; wide ratios use the variable t = ln x.
void add_interior(std::vector<Segment>& out, const SampledIntegrand& f, double a, double b) {
  if (!(b > a)) return;
  if (a > 0.0 && b / a >= 8.0) {
    out.push_back({[f](double t) -> Sample {
                     const double x = std::exp(t);
                     const Sample s = f(x);
                     return {s.value * x, s.err * x};
                   },
                   std::log(a), std::log(b)});
  } else {
    out.push_back({f, a, b});
  }
}

constexpr double kTailHorizon = 1e150;
constexpr double kTailLoss = 1e-13;

void add_tail(std::vector<Segment>& out, const SampledIntegrand& f, double a, Decay decay) {
  const double scale = a > 0.0 ? a : 1.0;
  switch (decay.kind) {
    case Decay::Kind::none:
      return;
    case Decay::Kind::algebraic: {
      if (!(decay.rate > 1.0))
        throw DomainError(fmt::format("algebraic decay rate {} is not integrable at infinity", decay.rate));
      // Mass beyond the horizon, relative to the tail, is about (horizon / L)^{1 - rate}.
      if ((decay.rate - 1.0) * std::log(kTailHorizon) < std::log(1.0 / kTailLoss))
        throw DomainError(fmt::format("algebraic decay rate {} is too slow to integrate in double precision", decay.rate));
      // x = a + L (v^{-m} - 1) in one step, so that x^{-rate} dx ~ v^{m (rate - 1) - 1} dv.
      const double m = substitution_power(decay.rate - 2.0);
      const double x_max = a + scale * kTailHorizon;
      out.push_back({[f, a, scale, m, x_max](double v) -> Sample {
                       if (!(v > 0.0)) return {};
                       const double vm = std::pow(v, -m);
                       const double x = a + scale * (vm - 1.0);
                       const double jac = scale * m * vm / v;
                       if (!(x <= x_max) || !std::isfinite(jac)) return {};
                       const Sample s = f(x);
                       if (s.value == 0.0 && s.err == 0.0) return {};
                       return {s.value * jac, s.err * jac};
                     },
                     0.0, 1.0});
      return;
    }
    case Decay::Kind::exponential: {
      out.push_back({[f, a, scale](double t) -> Sample {
                       if (!(t > 0.0)) return {};
                       const double x = a - scale * std::log(t);
                       if (!std::isfinite(x)) return {};
                       const double jac = scale / t;
                       const Sample s = f(x);
                       return {s.value * jac, s.err * jac};
                     },
                     0.0, 1.0});
      return;
    }
  }
}

std::vector<double> clean_points(const std::vector<double>& points) {
  std::vector<double> out;
  for (double p : points)
    if (p > 0.0 && std::isfinite(p)) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SampledIntegrand lift(const Integrand& f) {
  return [f](double x) { return Sample{f(x), 0.0}; };
}

// Pieces of the radial half-line (0, end] ending at `end`, using breakpoints below it.
void add_radial_head(std::vector<Segment>& out, const SampledIntegrand& f, const std::vector<double>& pts, double end,
                     double origin_exponent) {
  std::vector<double> chain;
  for (double p : pts)
    if (p < end) chain.push_back(p);
  chain.push_back(end);
  out.push_back(power_from_left(f, 0.0, chain.front(), origin_exponent));
  for (size_t i = 0; i + 1 < chain.size(); ++i) add_interior(out, f, chain[i], chain[i + 1]);
}

// Pieces of [start, inf), using breakpoints above start.
void add_radial_rest(std::vector<Segment>& out, const SampledIntegrand& f, const std::vector<double>& pts, double start,
                     Decay tail) {
  std::vector<double> chain{start};
  for (double p : pts)
    if (p > start) chain.push_back(p);
  for (size_t i = 0; i + 1 < chain.size(); ++i) add_interior(out, f, chain[i], chain[i + 1]);
  add_tail(out, f, chain.back(), tail);
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError(fmt::format("rel_tol must be positive, got {}", rel_tol));
  if (!(abs_tol > 0.0)) throw DomainError(fmt::format("abs_tol must be positive, got {}", abs_tol));
  if (max_subdivisions < 1) throw DomainError(fmt::format("max_subdivisions must be >= 1, got {}", max_subdivisions));
  if (!(diagonal_band_width > 0.0 && diagonal_band_width < 1.0))
    throw DomainError(fmt::format("diagonal_band_width must lie in (0, 1), got {}", diagonal_band_width));
}

QuadratureSpec QuadratureSpec::tightened(double factor) const {
  QuadratureSpec out = *this;
  out.rel_tol *= factor;
  out.abs_tol *= factor;
  return out;
}

QuadResult integrate_1d(const Integrand& f, double a, double b, EndpointFlags flags, const QuadratureSpec& spec) {
  return integrate_1d(lift(f), a, b, flags, spec);
}

QuadResult integrate_1d(const SampledIntegrand& f, double a, double b, EndpointFlags flags,
                        const QuadratureSpec& spec, OnFailure on_failure) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw DomainError(fmt::format("integrate_1d requires finite a < b, got [{}, {}]", a, b));
  std::vector<Segment> segments;
  add_flagged(segments, f, a, b, flags);
  return run_adaptive(segments, spec, on_failure);
}

QuadResult integrate_1d(const EndpointIntegrand& f, double a, double b, EndpointFlags flags,
                        const QuadratureSpec& spec) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw DomainError(fmt::format("integrate_1d requires finite a < b, got [{}, {}]", a, b));
  const double len = b - a;
  SampledIntegrand from_left = [f, a, len](double t) { return Sample{f(a + t, t, len - t), 0.0}; };
  SampledIntegrand from_right = [f, b, len](double t) { return Sample{f(b - t, len - t, t), 0.0}; };
  std::vector<Segment> segments;
  if (flags.left && flags.right) {
    segments.push_back(power_offset(from_left, 0.5 * len, flags.left_exponent));
    segments.push_back(power_offset(from_right, 0.5 * len, flags.right_exponent));
  } else if (flags.right) {
    segments.push_back(power_offset(from_right, len, flags.right_exponent));
  } else {
    segments.push_back(power_offset(from_left, len, flags.left ? flags.left_exponent : 1.0));
  }
  return run_adaptive(segments, spec, OnFailure::raise);
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, Decay decay, const QuadratureSpec& spec) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError(fmt::format("lower limit must be >= 0, got {}", a));
  if (decay.kind == Decay::Kind::none) throw DomainError("semi-infinite integral needs a decay hint");
  std::vector<Segment> segments;
  add_tail(segments, lift(f), a, decay);
  return run_adaptive(segments, spec, OnFailure::raise);
}

QuadResult integrate_radial(const SampledIntegrand& f, const RadialLayout& layout, const QuadratureSpec& spec,
                            OnFailure on_failure) {
  std::vector<double> pts = clean_points(layout.breakpoints);
  if (pts.empty()) {
    if (layout.tail.kind == Decay::Kind::none) throw DomainError("compact radial integrand needs a support breakpoint");
    pts.push_back(1.0);
  }
  std::vector<Segment> segments;
  add_radial_head(segments, f, pts, pts.front(), layout.origin_exponent);
  add_radial_rest(segments, f, pts, pts.front(), layout.tail);
  return run_adaptive(segments, spec, on_failure);
}

QuadResult integrate_radial(const Integrand& f, const RadialLayout& layout, const QuadratureSpec& spec) {
  return integrate_radial(lift(f), layout, spec);
}

QuadResult integrate_radial_about(const CentredIntegrand& f, double r, double diag_exponent,
                                  const RadialLayout& layout, const QuadratureSpec& spec, Sides sides,
                                  OnFailure on_failure) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError(fmt::format("centre radius must be positive, got {}", r));
  spec.validate();
  const double w = spec.diagonal_band_width;
  const std::vector<double> pts = clean_points(layout.breakpoints);
  std::vector<Segment> segments;

  auto add_band = [&](double sign) {
    std::vector<double> cuts{0.0};
    for (double p : pts) {
      const double u = sign * (p - r) / r;
      if (u > 0.0 && u < w) cuts.push_back(u);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(w);
    SampledIntegrand g = [f, r, sign](double u) -> Sample {
      const double delta = sign * r * u;
      const Sample s = f(r + delta, delta);
      return {s.value * r, s.err * r};
    };
    segments.push_back(power_from_left(g, cuts[0], cuts[1], diag_exponent));
    for (size_t i = 1; i + 1 < cuts.size(); ++i) segments.push_back({g, cuts[i], cuts[i + 1]});
  };
  SampledIntegrand plain = [f, r](double rho) { return f(rho, rho - r); };

  if (sides != Sides::left) {
    add_band(1.0);
    const double start = r * (1.0 + w);
    const bool beyond_support = layout.tail.kind == Decay::Kind::none && (pts.empty() || pts.back() <= start);
    if (!beyond_support) add_radial_rest(segments, plain, pts, start, layout.tail);
  }
  if (sides != Sides::right) {
    add_band(-1.0);
    add_radial_head(segments, plain, pts, r * (1.0 - w), layout.origin_exponent);
  }
  return run_adaptive(segments, spec, on_failure);
}

QuadResult integrate_diagonal_singular_2d(const PairIntegrand& F, const DiagonalLayout& layout,
                                          const QuadratureSpec& spec, Half half) {
  spec.validate();
  std::vector<double> pts = clean_points(layout.breakpoints);
  std::vector<double> probes = pts;
  if (probes.empty()) probes = {1.0};
  std::vector<double> sample_radii;
  for (double p : probes)
    for (double f : {0.37, 0.81, 1.23}) sample_radii.push_back(p * f);
  for (size_t i = 0; i < sample_radii.size(); ++i) {
    for (size_t j = i; j < sample_radii.size(); j += 3) {
      const double r = sample_radii[i];
      const double rho = sample_radii[j] * 1.17;
      const double a = F(r, rho, rho - r).value;
      const double b = F(rho, r, r - rho).value;
      if (std::abs(a - b) > 1e-8 * std::max(std::abs(a), std::abs(b)) + 1e-300)
        throw DomainError(fmt::format("integrand is not symmetric: F({0}, {1}) = {2} but F({1}, {0}) = {3}", r, rho, a,
                                      b));
    }
  }

  const RadialLayout inner{pts, layout.inner_origin_exponent, layout.inner_tail};
  const Sides side = half == Half::upper ? Sides::right : Sides::left;
  SampledIntegrand outer = [&](double r) -> Sample {
    const QuadResult q = integrate_radial_about([&F, r](double rho, double delta) { return F(r, rho, delta); }, r,
                                                layout.diag_exponent, inner, spec, side, OnFailure::best_effort);
    return {q.value, q.err_estimate};
  };
  const RadialLayout outer_layout{pts, layout.origin_exponent, layout.outer_tail};
  QuadResult result = integrate_radial(outer, outer_layout, spec);
  result.value *= 2.0;
  result.err_estimate *= 2.0;
  return result;
}

}  // namespace hardy
