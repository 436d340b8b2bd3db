// Acceptance checks 1-8. Each prints one PASS/FAIL line; the exit status is nonzero if any fails.
// Usage: acceptance [criterion ...]   (all criteria when none are given)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cli.hpp"
#include "hardy/constants.hpp"
#include "hardy/forms.hpp"
#include "hardy/identities.hpp"
#include "hardy/kernels.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/sharpness.hpp"

using namespace hardy;

namespace {

constexpr double pi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects sub-checks; the first failure is kept for the summary line.
struct Tally {
  bool pass = true;
  double worst = 0.0;
  std::string first_failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
  void bound(double value, double limit, const std::string& what) {
    worst = std::max(worst, value);
    expect(value <= limit, fmt::format("{} = {:.3g} > {:.3g}", what, value, limit));
  }
  Outcome outcome(const std::string& summary) const {
    return {pass, pass ? summary : summary + "; " + first_failure};
  }
};

Outcome sharp_constants() {
  Tally t;
  t.bound(rel(sharp_constant(InequalityParams(3, 1.0, 0.0)), pi / 2.0), 1e-12, "C(3,1,0) vs pi/2");
  t.bound(rel(sharp_constant(InequalityParams(3, 1.0, 2.0)), 2.0 * pi), 1e-12, "C(3,1,2) vs 2 pi");
  int cases = 0;
  double worst = 0.0;
  for (int n = 3; n <= 6; ++n)
    for (double a = 0.25; a < n; a += 0.25) {
      const double e = rel(sharp_constant(InequalityParams(n, a, 2.0)), gradient_sharp_constant(n, a));
      worst = std::max(worst, e);
      t.bound(e, 1e-12, fmt::format("general vs gradient formula at N={} alpha={}", n, a));
      ++cases;
    }
  return t.outcome(fmt::format("pi/2 and 2 pi reproduced; {} (N, alpha) pairs agree to {:.2g}", cases, worst));
}

Outcome riesz_power_law() {
  Tally t;
  const std::vector<double> radii = {0.1, 1.0, 10.0};
  const auto report = verify_riesz_power_law(3, 1.0, 2.0, radii);
  t.expect(report.pass, "power-law report failed");
  t.bound(report.residual_rel, 1e-8, "report residual");
  for (double r : radii) {
    const double v = riesz_radial_potential(RadialProfile::pure_power(2.0), 1.0, r, 3).value;
    t.bound(rel(v, pi / 2.0 / r), 1e-8, fmt::format("I_1 |x|^-2 at r={}", r));
  }
  return t.outcome(fmt::format("I_1 |x|^-2 = (pi/2) r^-1 at r = 0.1, 1, 10; worst rel {:.2g}", t.worst));
}

Outcome semigroup() {
  Tally t;
  const auto report = verify_semigroup(3, 0.5, 0.5, RadialProfile::gaussian(1.0), {0.1, 1.0, 10.0});
  t.expect(report.pass, "semigroup report failed");
  t.bound(report.residual_rel, 1e-6, "deviation");
  return t.outcome(fmt::format("I_1/2 I_1/2 f = I_1 f, worst deviation {:.2g} at r = {}", report.residual_rel,
                               report.worst_radius.value_or(0.0)));
}

Outcome identity_closures() {
  Tally t;
  const auto g = RadialProfile::gaussian(1.0);
  std::string parts;
  auto closes = [&](const char* label, const std::function<VerificationReport()>& run, double limit) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto report = run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    t.expect(report.pass, fmt::format("{} verdict false", label));
    t.bound(report.residual_rel, limit, fmt::format("{} residual", label));
    t.expect(secs <= 120.0, fmt::format("{} took {:.1f} s", label, secs));
    parts += fmt::format("{}{} {:.1e}", parts.empty() ? "" : ", ", label, report.residual_rel);
  };
  closes("A'", [&] { return verify_theorem_A_prime(g, 3, 1.0); }, 1e-5);
  closes("B'", [&] { return verify_theorem_B_prime(g, 3, 1.0); }, 1e-4);
  closes("C'", [&] { return verify_theorem_C_prime(g, InequalityParams(3, 1.0, 1.0)); }, 1e-4);
  closes("fls", [&] { return verify_fls_representation(g, 3, 1.0); }, 1e-4);
  closes("local", [&] { return verify_local_hardy(g, 3); }, 1e-8);
  return t.outcome("residuals " + parts);
}

Outcome route_agreement() {
  Tally t;
  const auto g = RadialProfile::gaussian(1.0);
  double worst_routes = 0.0, worst_closed = 0.0;
  for (int n : {1, 2, 3})
    for (double s : {0.3, 1.0, 1.7}) {
      const double di = fractional_seminorm(g, n, s, Route::double_integral).value;
      const double fo = fractional_seminorm(g, n, s, Route::fourier).value;
      const double closed = std::pow(pi, n / 2.0) * std::tgamma((n + s) / 2.0) / std::tgamma(n / 2.0);
      worst_routes = std::max(worst_routes, rel(di, fo));
      worst_closed = std::max(worst_closed, rel(fo, closed));
      t.bound(rel(di, fo), 1e-6, fmt::format("routes at N={} s={}", n, s));
      t.bound(rel(fo, closed), 1e-10, fmt::format("Fourier closed form at N={} s={}", n, s));
    }
  return t.outcome(fmt::format("9 (N, s) pairs: routes agree to {:.2g}, Fourier value to {:.2g}", worst_routes,
                               worst_closed));
}

Outcome sharpness() {
  Tally t;
  const InequalityParams params(3, 1.0, 0.0);
  const auto sweep = sharpness_sweep(params, default_lambdas());
  const auto& rows = sweep.rows;
  const double c = sweep.sharp_constant;
  for (size_t i = 0; i < rows.size(); ++i) {
    t.expect(rows[i].quotient < c, fmt::format("quotient {} >= C at lambda {}", rows[i].quotient, rows[i].lambda));
    if (i > 0) t.expect(rows[i].deficit < rows[i - 1].deficit, fmt::format("deficit rises at lambda {}", rows[i].lambda));
  }
  double lo = rows[rows.size() - 3].remainder_J, hi = lo;
  for (size_t i = rows.size() - 3; i < rows.size(); ++i) {
    lo = std::min(lo, rows[i].remainder_J);
    hi = std::max(hi, rows[i].remainder_J);
  }
  t.bound(hi / lo, 3.0, "remainder_J max/min over last three rows");
  const double per_decade = 2.0 * sphere_area(3) * std::log(10.0);
  double worst_inc = 0.0;
  for (size_t i = 1; i < rows.size(); ++i) {
    const double decades = std::log10(rows[i].lambda / rows[i - 1].lambda);
    const double e = std::abs((rows[i].denominator - rows[i - 1].denominator) / (per_decade * decades) - 1.0);
    worst_inc = std::max(worst_inc, e);
    t.bound(e, 0.1, fmt::format("denominator increment at lambda {}", rows[i].lambda));
  }
  return t.outcome(fmt::format("deficit {:.3g} -> {:.3g}, J spread {:.4g}, increments within {:.2g} of 2|S^2| ln 10",
                               rows.front().deficit, rows.back().deficit, hi / lo, worst_inc));
}

Outcome discrete_groundstate() {
  Tally t;
  std::mt19937_64 rng(20240601);
  int sparse = 0, zero_rows = 0;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto inst = cli::random_discrete_instance(rng, 50);
    const size_t n = inst.u.size();
    size_t nonzero = 0;
    for (size_t a = 0; a < n; ++a) {
      bool zero = true;
      for (size_t b = 0; b < n; ++b) {
        nonzero += inst.K[a][b] != 0.0;
        zero = zero && inst.K[a][b] == 0.0;
      }
      zero_rows += zero;
    }
    sparse += nonzero * 4 < n * n;
    const auto r = verify_discrete_groundstate(inst.K, inst.u, inst.phi);
    worst = std::max(worst, r.residual_rel);
    t.bound(r.residual_rel, 1e-12, fmt::format("instance {} residual", i));
    const auto g = verify_discrete_groundstate(inst.K, inst.u, inst.u);
    t.bound(std::abs(g.rhs_remainder), 1e-14, fmt::format("instance {} remainder at phi = u", i));
    t.bound(std::abs(g.lhs - g.rhs_main) / std::max(std::abs(g.lhs), 1e-300), 1e-14,
            fmt::format("instance {} lhs - main at phi = u", i));
  }
  t.expect(sparse > 0 && zero_rows > 0, "generator produced no sparse or zero-row instances");
  return t.outcome(fmt::format("1000 instances ({} sparse, {} zero rows), worst residual {:.2g}", sparse, zero_rows,
                               worst));
}

Outcome property_suite() {
  Tally t;
  // Kernel symmetry and homogeneity.
  for (int n = 1; n <= 5; ++n) {
    std::vector<AngularKernel> ks = {AngularKernel::seminorm(n, 0.3), AngularKernel::seminorm(n, 1.7)};
    for (double a : {0.3, 0.5 * n}) ks.push_back(AngularKernel::riesz(n, a));
    for (const auto& k : ks)
      for (auto [r, r2] : {std::pair{0.1, 1.0}, {1.0, 1.05}, {3.0, 20.0}}) {
        const double v = angular_average(k, r, r2);
        t.bound(rel(angular_average(k, r2, r), v), 1e-10, fmt::format("kernel symmetry N={}", n));
        for (double c : {2.0, 10.0})
          t.bound(rel(angular_average(k, c * r, c * r2), std::pow(c, -k.exponent()) * v), 1e-10,
                  fmt::format("kernel homogeneity N={}", n));
      }
  }
  // Scale covariance of the forms.
  const auto g = RadialProfile::gaussian(1.0);
  const int n = 3;
  const double s = 1.0;
  const InequalityParams params(n, 1.0, s);
  auto forms = [&](const RadialProfile& f) {
    return std::vector<std::pair<double, double>>{
        {stein_weiss_form(f, params).value, n - s},
        {fractional_seminorm(f, n, s, Route::double_integral).value, n - s},
        {weighted_l2(f, n, s).value, n - s},
        {gradient_form(f, n).value, n - 2.0},
        {riesz_remainder(f, params, params.ground_exponent()).value, n - s},
        {fractional_remainder(f, n, s).value, n - s},
        {local_hardy_remainder(f, n).value, n - 2.0}};
  };
  const auto base = forms(g);
  for (double c : {2.0, 10.0}) {
    const auto scaled = forms(g.dilated(c));
    for (size_t i = 0; i < base.size(); ++i)
      t.bound(rel(scaled[i].first, std::pow(c, base[i].second) * base[i].first), 1e-8,
              fmt::format("form {} scale covariance at t={}", i, c));
  }
  // Remainder nonnegativity.
  for (const auto& f : {g, RadialProfile::bump(), RadialProfile::truncated_power(1.0, 10.0), g.dilated(0.2)})
    for (const auto& p : {InequalityParams(3, 1.0, 0.5), InequalityParams(3, 2.0, 1.5)}) {
      t.expect(riesz_remainder(f, p, p.ground_exponent()).value >= 0.0, "Riesz remainder negative");
      t.expect(fractional_remainder(f, 3, p.s()).value >= 0.0, "fractional remainder negative");
      t.expect(local_hardy_remainder(f, 3).value >= 0.0, "local remainder negative");
    }
  // Quadrature oracles.
  for (double a : {0.3, 0.5, 1.0, 2.5})
    for (double b : {0.2, 0.5, 1.0, 3.0}) {
      const EndpointIntegrand f = [a, b](double x, double left, double right) {
        (void)x;
        return std::pow(left, a - 1.0) * std::pow(right, b - 1.0);
      };
      const auto q = integrate_1d(f, 0.0, 1.0, EndpointFlags::both(a - 1.0, b - 1.0));
      t.bound(rel(q.value, std::beta(a, b)), 1e-10, fmt::format("Beta({}, {})", a, b));
    }
  for (double a : {0.25, 0.5, 1.0, 3.5, 7.0}) {
    const auto q = integrate_radial([a](double x) { return std::pow(x, a - 1.0) * std::exp(-x); },
                                    RadialLayout{{1.0, a}, a - 1.0, Decay::exponential()});
    t.bound(rel(q.value, std::tgamma(a)), 1e-10, fmt::format("Gamma({})", a));
  }
  return t.outcome("kernel symmetry/homogeneity, scale covariance, nonnegative remainders, Beta/Gamma oracles");
}

struct Criterion {
  const char* name;
  double runtime_limit;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"sharp constants", 1.0, sharp_constants},
    {"Riesz power law", 10.0, riesz_power_law},
    {"semigroup", 60.0, semigroup},
    {"identity closures", 600.0, identity_closures},
    {"seminorm route agreement", 1e9, route_agreement},
    {"sharpness sweep", 600.0, sharpness},
    {"discrete groundstate identity", 5.0, discrete_groundstate},
    {"property suite", 1e9, property_suite},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > 8) {
      std::fprintf(stderr, "unknown criterion '%s' (expected 1-8)\n", argv[i]);
      return 2;
    }
    selected.push_back(k);
  }
  if (selected.empty())
    for (int k = 1; k <= 8; ++k) selected.push_back(k);

  bool all = true;
  for (int k : selected) {
    const Criterion& c = kCriteria[k - 1];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, fmt::format("threw: {}", e.what())};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.runtime_limit) {
      o.pass = false;
      o.detail += fmt::format("; runtime {:.2f} s exceeds {:g} s", secs, c.runtime_limit);
    }
    fmt::print("criterion {}: {} {} ({}, {:.2f} s)\n", k, o.pass ? "PASS" : "FAIL", c.name, o.detail, secs);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
