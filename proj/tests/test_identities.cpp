#include <cmath>
#include <random>

#include "doctest.h"
#include "hardy/constants.hpp"
#include "hardy/errors.hpp"
#include "hardy/forms.hpp"
#include "hardy/identities.hpp"

using namespace hardy;

namespace {
const double pi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

void check_closes(const VerificationReport& r, double bound) {
  CAPTURE(r.identity_name);
  CAPTURE(r.profile);
  CHECK(r.residual_rel <= bound);
  CHECK(r.pass);
  CHECK(r.err_budget >= 0.0);
  CHECK(r.rhs_remainder >= 0.0);
  CHECK(r.residual_rel == doctest::Approx(std::abs(r.lhs - r.rhs_main - r.rhs_remainder) /
                                          std::max(std::abs(r.lhs), 1e-300)));
}

void check_zero(const VerificationReport& r) {
  CAPTURE(r.identity_name);
  CHECK(r.lhs == 0.0);
  CHECK(r.rhs_main == 0.0);
  CHECK(r.rhs_remainder == 0.0);
  CHECK(r.pass);
}

std::vector<std::vector<double>> random_symmetric(std::mt19937_64& rng, int n, double density) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> k(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (unit(rng) < density) k[i][j] = k[j][i] = 10.0 * unit(rng);
  return k;
}
}  // namespace

TEST_CASE("Stein-Weiss identities close on Gaussians and truncated powers") {
  const auto g = RadialProfile::gaussian(1.0);
  check_closes(verify_theorem_A_prime(g, 3, 1.0), 1e-5);
  check_closes(verify_theorem_A_prime(RadialProfile::truncated_power(1.5, 10.0), 3, 1.0), 1e-4);
  check_closes(verify_theorem_A_prime(RadialProfile::bump(), 1, 0.5), 1e-5);
  check_closes(verify_theorem_B_prime(g, 3, 1.0), 1e-4);
  check_closes(verify_theorem_B_prime(RadialProfile::bump(), 4, 2.0), 1e-4);
  check_closes(verify_theorem_C_prime(g, InequalityParams(3, 1.0, 1.0)), 1e-4);
  check_closes(verify_theorem_C_prime(RadialProfile::bump(), InequalityParams(2, 0.5, 0.5)), 1e-4);
  check_closes(verify_theorem_C_prime(RadialProfile::bump(), InequalityParams(1, 0.5, 0.5)), 1e-4);
}

TEST_CASE("fractional and local Hardy identities") {
  const auto g = RadialProfile::gaussian(1.0);
  const auto fls = verify_fls_representation(g, 3, 1.0);
  check_closes(fls, 1e-4);
  CHECK(rel(fls.lhs, 2.0 * pi) < 1e-8);
  check_closes(verify_fls_representation(RadialProfile::bump(), 1, 0.5), 1e-4);
  const auto lh = verify_local_hardy(g, 3);
  check_closes(lh, 1e-8);
  // ((N-2)/2)^2 = 1/4 times int |phi|^2 |x|^{-2} = 2 pi^{3/2}.
  CHECK(rel(lh.rhs_main, 0.5 * std::pow(pi, 1.5)) < 1e-12);
  check_closes(verify_local_hardy(RadialProfile::bump(), 5), 1e-8);
}

TEST_CASE("identity names and parameters") {
  const auto g = RadialProfile::gaussian(1.0);
  const auto a = verify_theorem_A_prime(g, 3, 1.0);
  CHECK(a.identity_name == "A-prime");
  CHECK(a.params == ReportParams{3, 1.0, 0.0, std::nullopt});
  CHECK(a.profile == g.describe());
  const auto b = verify_theorem_B_prime(g, 3, 1.0);
  CHECK(b.identity_name == "B-prime");
  CHECK(b.params.s == 2.0);
  CHECK(verify_fls_representation(g, 3, 1.0).identity_name == "fls");
  CHECK(verify_local_hardy(g, 3).identity_name == "local-hardy");
  // The gradient identity uses the s = 2 member of the constant family.
  const double grad_side = gradient_form(g, 3).value - local_hardy_remainder(g, 3).value;
  CHECK(rel(b.lhs, sharp_constant(InequalityParams(3, 1.0, 2.0)) * grad_side) < 1e-12);
}

TEST_CASE("zero input gives zero terms") {
  const auto zero = RadialProfile::bump().multiplied(0.0);
  check_zero(verify_theorem_A_prime(zero, 3, 1.0));
  check_zero(verify_theorem_B_prime(zero, 3, 1.0));
  check_zero(verify_theorem_C_prime(zero, InequalityParams(3, 1.0, 1.0)));
  check_zero(verify_fls_representation(zero, 3, 1.0));
  check_zero(verify_local_hardy(zero, 3));
}

TEST_CASE("quadratic homogeneity of reports") {
  const auto g = RadialProfile::gaussian(1.0);
  const auto g3 = g.multiplied(3.0);
  auto compare = [](const VerificationReport& one, const VerificationReport& three) {
    CAPTURE(one.identity_name);
    CHECK(rel(three.lhs, 9.0 * one.lhs) < 1e-12);
    CHECK(rel(three.rhs_main, 9.0 * one.rhs_main) < 1e-12);
    CHECK(rel(three.rhs_remainder, 9.0 * one.rhs_remainder) < 1e-12);
    CHECK(std::abs(three.residual_rel - one.residual_rel) < 1e-13);
  };
  compare(verify_theorem_A_prime(g, 3, 1.0), verify_theorem_A_prime(g3, 3, 1.0));
  compare(verify_theorem_B_prime(g, 3, 1.0), verify_theorem_B_prime(g3, 3, 1.0));
  compare(verify_theorem_C_prime(g, InequalityParams(3, 1.0, 1.0)),
          verify_theorem_C_prime(g3, InequalityParams(3, 1.0, 1.0)));
  compare(verify_fls_representation(g, 3, 1.0), verify_fls_representation(g3, 3, 1.0));
  compare(verify_local_hardy(g, 3), verify_local_hardy(g3, 3));
}

TEST_CASE("verdicts are monotone in the tolerance") {
  const auto r = verify_theorem_A_prime(RadialProfile::gaussian(1.0), 3, 1.0);
  const double tols[] = {1e-16, 1e-15, 1e-14, 1e-13, 1e-12, 1e-8, 1e-4};
  bool passed = false;
  for (double tol : tols) {
    const auto t = make_report(r.identity_name, r.params, r.profile, r.lhs, r.rhs_main, r.rhs_remainder, r.err_budget, tol);
    CHECK(t.pass == (t.residual_rel <= tol));
    if (passed) CHECK(t.pass);
    passed = t.pass;
  }
  CHECK(passed);
  const auto d = make_report("x", {}, "", 2.0, 1.0, 0.5, 1e-3);
  CHECK(d.residual_rel == doctest::Approx(0.25));
  CHECK(d.tolerance == doctest::Approx(5e-3));
  CHECK_FALSE(d.pass);
}

TEST_CASE("fractional identity approaches the L2 identity as s -> 0") {
  const auto g = RadialProfile::gaussian(1.0);
  const auto a = verify_theorem_A_prime(g, 3, 1.0);
  const double c0 = sharp_constant(InequalityParams(3, 1.0, 0.0));
  // With the bracket divided by C, the small-s fractional identity reads ||phi||^2 = Q/C + J/C.
  double previous = 1.0;
  for (double s : {0.4, 0.2, 0.1}) {
    const auto c = verify_theorem_C_prime(g, InequalityParams(3, 1.0, s));
    CHECK(c.pass);
    const double gap_lhs = rel(c.lhs, a.lhs / c0);
    const double gap_main = rel(c.rhs_main, a.rhs_main / c0);
    const double gap_rem = rel(c.rhs_remainder, a.rhs_remainder / c0);
    CHECK(gap_lhs < 2.0 * s);
    CHECK(gap_main < 2.0 * s);
    CHECK(gap_rem < 2.0 * s);
    CHECK(gap_main < previous);
    previous = gap_main;
  }
}

TEST_CASE("pointwise Riesz checks") {
  const auto pl = verify_riesz_power_law(3, 1.0, 2.0, {1.0});
  CHECK(pl.pass);
  CHECK(rel(pl.lhs, pi / 2.0) < 1e-8);
  CHECK(rel(riesz_power_law_constant(3, 1.0, 2.0), pi / 2.0) < 1e-14);
  const auto pl3 = verify_riesz_power_law(3, 1.0, 2.0, {0.1, 1.0, 10.0});
  CHECK(pl3.pass);
  CHECK(pl3.residual_rel < 1e-8);
  CHECK(pl3.params.beta == 2.0);
  CHECK(pl3.worst_radius.has_value());
  CHECK_THROWS_AS(verify_riesz_power_law(3, 1.0, 1.0, {1.0}), DomainError);
  CHECK_THROWS_AS(verify_riesz_power_law(3, 1.0, 0.5, {1.0}), DomainError);

  const auto sg = verify_semigroup(3, 0.5, 0.5, RadialProfile::gaussian(1.0), {0.1, 1.0, 10.0});
  CHECK(sg.pass);
  CHECK(sg.residual_rel <= 1e-6);
  CHECK_THROWS_AS(verify_semigroup(3, 1.5, 1.5, RadialProfile::gaussian(1.0), {1.0}), DomainError);
  CHECK_THROWS_AS(verify_semigroup(3, 2.0, 1.5, RadialProfile::gaussian(1.0), {1.0}), DomainError);
}

TEST_CASE("domain errors") {
  const auto g = RadialProfile::gaussian(1.0);
  CHECK_THROWS_AS(verify_theorem_B_prime(g, 2, 1.0), DomainError);
  CHECK_THROWS_AS(verify_theorem_A_prime(g, 3, 3.0), DomainError);
  CHECK_THROWS_AS(verify_theorem_C_prime(g, InequalityParams(3, 1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(verify_theorem_C_prime(g, InequalityParams(3, 1.0, 2.0)), DomainError);
  CHECK_THROWS_AS(verify_fls_representation(g, 1, 1.5), DomainError);
  CHECK_THROWS_AS(verify_local_hardy(g, 2), DomainError);
  CHECK_THROWS_AS(verify_theorem_A_prime(RadialProfile::pure_power(1.5), 3, 1.0), DomainError);
}

TEST_CASE("discrete groundstate identity") {
  // n = 1: k x^2 = k x^2 + 0.
  const auto one = verify_discrete_groundstate({{2.5}}, {1.0}, {3.0});
  CHECK(one.lhs == 22.5);
  CHECK(one.rhs_main == 22.5);
  CHECK(one.rhs_remainder == 0.0);
  CHECK(one.pass);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 50;
    auto k = random_symmetric(rng, n, trial % 3 == 0 ? 0.1 : 0.8);
    if (trial % 5 == 0)
      for (int j = 0; j < n; ++j) k[0][j] = k[j][0] = 0.0;
    std::vector<double> u(n), phi(n);
    for (int i = 0; i < n; ++i) {
      u[i] = 0.1 + unit(rng);
      phi[i] = unit(rng) - 0.5;
    }
    const auto r = verify_discrete_groundstate(k, u, phi);
    CHECK(r.residual_rel <= 1e-12);
    CHECK(r.rhs_remainder >= 0.0);
    // phi = c u annihilates the remainder.
    std::vector<double> cu(n);
    for (int i = 0; i < n; ++i) cu[i] = -1.7 * u[i];
    const auto z = verify_discrete_groundstate(k, u, cu);
    CHECK(std::abs(z.rhs_remainder) <= 1e-14 * std::max(1.0, std::abs(z.lhs)));
    CHECK(z.pass);
  }

  CHECK_THROWS_AS(verify_discrete_groundstate({{1.0, 2.0}, {1.0, 1.0}}, {1.0, 1.0}, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(verify_discrete_groundstate({{1.0, -1.0}, {-1.0, 1.0}}, {1.0, 1.0}, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(verify_discrete_groundstate({{1.0}}, {0.0}, {1.0}), DomainError);
  CHECK_THROWS_AS(verify_discrete_groundstate({{1.0}}, {1.0, 2.0}, {1.0}), DomainError);
}
