#include "hardy/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include <fmt/format.h>

#include "hardy/constants.hpp"
#include "hardy/errors.hpp"
#include "hardy/forms.hpp"
#include "hardy/radial.hpp"

namespace hardy {
namespace {

constexpr double kBoundRatio = 3.0;

double spread(const std::vector<double>& values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo <= 0.0) return std::numeric_limits<double>::infinity();
  return *hi / *lo;
}

std::vector<double> tail_of(const std::vector<SweepRow>& rows, auto field, size_t count = 3) {
  std::vector<double> out;
  const size_t start = rows.size() > count ? rows.size() - count : 0;
  for (size_t i = start; i < rows.size(); ++i) out.push_back(field(rows[i]));
  return out;
}

}  // namespace

bool SweepResult::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SweepCheck& c) { return c.pass; });
}

std::vector<double> default_lambdas() { return {1.0, 10.0, 100.0, 1000.0, 10000.0}; }

SweepRow rayleigh_quotient(const InequalityParams& params, double lambda, const QuadratureSpec& spec) {
  const RadialProfile u = u_lambda(params, lambda);
  const int n = params.dimension();
  const double s = params.s();
  const double c = sharp_constant(params);

  const FormValue q = stein_weiss_form(u, params, spec);
  const FormValue j = riesz_remainder(u, params, params.ground_exponent(), spec);
  SweepRow row;
  row.lambda = lambda;
  row.remainder_J = 2.0 * j.value;

  // Left side of the groundstate identity, before multiplying by C.
  double side = 0.0;
  double side_err = 0.0;
  FormValue den;
  if (params.is_l2()) {
    den = l2_norm_sq(u, n, spec);
    side = den.value;
    side_err = den.err_estimate;
  } else if (params.is_gradient()) {
    den = gradient_form(u, n, spec);
    const FormValue local = local_hardy_remainder(u, n, spec);
    row.remainder_R = local.value;
    side = den.value - local.value;
    side_err = den.err_estimate + local.err_estimate;
  } else {
    den = fractional_seminorm(u, n, s, Route::double_integral, spec);
    const FormValue rem = fractional_remainder(u, n, s, spec);
    const double d = seminorm_normalization(n, s);
    row.remainder_R = rem.value;
    side = den.value - d * rem.value;
    side_err = den.err_estimate + d * rem.err_estimate;
  }
  row.denominator = den.value;
  row.quotient = q.value / den.value;
  row.deficit = 1.0 - row.quotient / c;
  const double lhs = c * side;
  row.err_budget = c * side_err + q.err_estimate + j.err_estimate;
  row.closure_residual = std::abs(lhs - q.value - j.value) / std::max(std::abs(lhs), 1e-300);
  return row;
}

SweepResult sharpness_sweep(const InequalityParams& params, const std::vector<double>& lambdas,
                            const QuadratureSpec& spec, bool concurrent) {
  if (lambdas.empty()) throw DomainError("sweep needs at least one lambda");
  for (size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] >= 1.0)) throw DomainError(fmt::format("lambda must be >= 1, got {}", lambdas[i]));
    if (i > 0 && !(lambdas[i] > lambdas[i - 1])) throw DomainError("lambdas must be strictly increasing");
  }
  spec.validate();

  SweepResult result{params, sharp_constant(params), {}, {}};
  if (concurrent) {
    std::vector<std::future<SweepRow>> pending;
    for (double lambda : lambdas)
      pending.push_back(std::async(std::launch::async, [&params, &spec, lambda] {
        return rayleigh_quotient(params, lambda, spec);
      }));
    for (auto& f : pending) result.rows.push_back(f.get());
  } else {
    for (double lambda : lambdas) result.rows.push_back(rayleigh_quotient(params, lambda, spec));
  }
  const auto& rows = result.rows;
  const double c = result.sharp_constant;

  auto add = [&](std::string name, bool pass, std::string detail) {
    result.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const double j_spread = spread(tail_of(rows, [](const SweepRow& r) { return r.remainder_J; }));
  add("remainder_J_bounded", j_spread <= kBoundRatio, fmt::format("max/min over last rows = {:.6g}", j_spread));
  if (rows.front().remainder_R) {
    const double r_spread = spread(tail_of(rows, [](const SweepRow& r) { return *r.remainder_R; }));
    add("remainder_R_bounded", r_spread <= kBoundRatio, fmt::format("max/min over last rows = {:.6g}", r_spread));
  }

  bool increasing = true;
  bool decreasing = true;
  for (size_t i = 1; i < rows.size(); ++i) {
    increasing = increasing && rows[i].denominator > rows[i - 1].denominator;
    decreasing = decreasing && rows[i].deficit < rows[i - 1].deficit;
  }
  add("denominator_increasing", increasing,
      fmt::format("last/first = {:.6g}", rows.back().denominator / rows.front().denominator));
  add("deficit_decreasing", decreasing,
      fmt::format("first = {:.6g}, last = {:.6g}", rows.front().deficit, rows.back().deficit));

  const bool below = std::all_of(rows.begin(), rows.end(), [c](const SweepRow& r) { return r.quotient < c; });
  add("quotient_below_constant", below, fmt::format("C = {:.17g}", c));

  // ln(lambda) vanishes at lambda = 1, so the rate check needs the last rows above 1.
  const auto tail_lambdas = tail_of(rows, [](const SweepRow& r) { return r.lambda; });
  if (rows.size() >= 2 && tail_lambdas.front() > 1.0) {
    const double rate_spread = spread(tail_of(rows, [](const SweepRow& r) { return r.deficit * std::log(r.lambda); }));
    add("deficit_log_rate", rate_spread <= kBoundRatio,
        fmt::format("max/min of deficit*ln(lambda) = {:.6g}", rate_spread));
  }

  double worst = 0.0;
  bool closes = true;
  for (const auto& r : rows) {
    const double tol = std::max(10.0 * r.err_budget / (c * r.denominator), 1e-12);
    worst = std::max(worst, r.closure_residual);
    closes = closes && r.closure_residual <= tol;
  }
  add("identity_closes", closes, fmt::format("worst residual = {:.3g}", worst));
  return result;
}

}  // namespace hardy
