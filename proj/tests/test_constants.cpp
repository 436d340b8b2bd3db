#include <cmath>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "doctest.h"
#include "hardy/constants.hpp"
#include "hardy/errors.hpp"

using namespace hardy;
using boost::math::tgamma;

namespace {
const double pi = boost::math::constants::pi<double>();

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("log_gamma matches known values") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(rel(log_gamma(0.5), 0.5 * std::log(pi)) < 1e-14);
  CHECK(rel(log_gamma(10.0), std::log(362880.0)) < 1e-14);
  for (double x : {0.01, 0.3, 1.7, 4.25, 33.5, 170.0}) CHECK(rel(log_gamma(x), boost::math::lgamma(x)) < 1e-14);
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}

TEST_CASE("riesz normalization") {
  CHECK(rel(riesz_normalization(3, 2.0), 1.0 / (4.0 * pi)) < 1e-14);
  CHECK(rel(riesz_normalization(3, 1.0), 1.0 / (2.0 * pi * pi)) < 1e-14);
  CHECK(rel(riesz_normalization(1, 0.5), 1.0 / std::sqrt(2.0 * pi)) < 1e-14);
  CHECK_THROWS_AS(riesz_normalization(3, 3.0), DomainError);
  CHECK_THROWS_AS(riesz_normalization(3, 0.0), DomainError);
}

TEST_CASE("seminorm normalization") {
  CHECK(rel(seminorm_normalization(1, 1.0), 1.0 / (2.0 * pi)) < 1e-14);
  CHECK(rel(seminorm_normalization(3, 1.0), 1.0 / (2.0 * pi * pi)) < 1e-14);
  // Linear vanishing as s -> 0.
  const double d1 = seminorm_normalization(3, 1e-6);
  const double d2 = seminorm_normalization(3, 2e-6);
  CHECK(rel(d2 / d1, 2.0) < 1e-5);
  CHECK_THROWS_AS(seminorm_normalization(3, 2.0), DomainError);
  CHECK_THROWS_AS(seminorm_normalization(3, 0.0), DomainError);
}

TEST_CASE("sharp constants at the endpoints") {
  CHECK(rel(sharp_constant(InequalityParams(3, 1.0, 0.0)), pi / 2.0) < 1e-12);
  CHECK(rel(sharp_constant(InequalityParams(3, 1.0, 2.0)), 2.0 * pi) < 1e-12);
  for (int n = 1; n <= 8; ++n)
    for (double a = 0.25; a < n; a += 0.25) {
      const double direct = std::pow(2.0, -a) * std::pow(tgamma((n - a) / 4.0) / tgamma((n + a) / 4.0), 2);
      CHECK(rel(sharp_constant(InequalityParams(n, a, 0.0)), direct) < 1e-12);
      CHECK(rel(l2_sharp_constant(n, a), direct) < 1e-12);
    }
  for (int n = 3; n <= 6; ++n)
    for (double a = 0.25; a < n; a += 0.25) {
      const double direct =
          std::pow(2.0, 2.0 - a) * std::pow(tgamma((n - a) / 4.0) / ((n - 2) * tgamma((n + a) / 4.0)), 2);
      CHECK(rel(sharp_constant(InequalityParams(n, a, 2.0)), direct) < 1e-12);
      CHECK(rel(gradient_sharp_constant(n, a), direct) < 1e-12);
    }
}

TEST_CASE("sharp constant general formula against an independent evaluation") {
  for (int n : {1, 2, 3, 5})
    for (double a : {0.3, 0.9})
      for (double s : {0.2, 0.7, 0.95}) {
        const double g = tgamma((n - s) / 4.0) * tgamma((n - a) / 4.0) / (tgamma((n + s) / 4.0) * tgamma((n + a) / 4.0));
        CHECK(rel(sharp_constant(InequalityParams(n, a, s)), std::pow(2.0, -(a + s)) * g * g) < 1e-12);
      }
}

TEST_CASE("constants stay finite for large dimension") {
  const double c = sharp_constant(InequalityParams(20, 19.9, 1.5));
  CHECK(std::isfinite(c));
  CHECK(c > 0.0);
}

TEST_CASE("constants grow monotonically towards the boundary") {
  double prev = 0.0;
  for (double a : {2.0, 2.5, 2.9, 2.99, 2.999}) {
    const double c = sharp_constant(InequalityParams(3, a, 0.0));
    CHECK(c > prev);
    prev = c;
  }
  prev = 0.0;
  for (double s : {0.5, 0.8, 0.9, 0.99, 0.999}) {
    const double c = sharp_constant(InequalityParams(1, 0.5, s));
    CHECK(c > prev);
    prev = c;
  }
}

TEST_CASE("riesz power law constant") {
  CHECK(rel(riesz_power_law_constant(3, 1.0, 2.0), pi / 2.0) < 1e-12);
  CHECK(rel(riesz_power_law_constant(3, 1.0, 1.5), tgamma(0.25) / (2.0 * tgamma(1.25))) < 1e-12);
  for (int n : {2, 3, 4, 7})
    for (double a : {0.5, 1.0, 1.5}) {
      if (a >= n) continue;
      CHECK(rel(riesz_power_law_constant(n, a, (n + a) / 2.0), l2_sharp_constant(n, a)) < 1e-12);
      for (double b : {a + 0.1 * (n - a), a + 0.4 * (n - a)})
        CHECK(rel(riesz_power_law_constant(n, a, b), riesz_power_law_constant(n, a, n + a - b)) < 1e-12);
    }
  CHECK_THROWS_AS(riesz_power_law_constant(3, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(riesz_power_law_constant(3, 1.0, 3.0), DomainError);
}

TEST_CASE("sphere area") {
  CHECK(sphere_area(1) == 2.0);
  CHECK(rel(sphere_area(2), 2.0 * pi) < 1e-15);
  CHECK(rel(sphere_area(3), 4.0 * pi) < 1e-15);
  CHECK(rel(sphere_area(4), 2.0 * pi * pi) < 1e-15);
}

TEST_CASE("parameter admissibility") {
  CHECK_THROWS_AS(InequalityParams(0, 0.5, 0.0), DomainError);
  CHECK_THROWS_AS(InequalityParams(3, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(InequalityParams(3, 3.0, 0.0), DomainError);
  CHECK_THROWS_AS(InequalityParams(3, 1.0, 2.5), DomainError);
  CHECK_THROWS_AS(InequalityParams(1, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(InequalityParams(2, 0.5, 2.0), DomainError);
  const InequalityParams p(3, 1.0, 2.0);
  CHECK(p.is_gradient());
  CHECK(p.ground_exponent() == 0.5);
}
