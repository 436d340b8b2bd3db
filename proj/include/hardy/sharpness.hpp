#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hardy/params.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

/// Rayleigh quotient data of u_lambda for one lambda.
struct SweepRow {
  double lambda = 1.0;
  double quotient = 0.0;
  /// 1 - quotient / C_{N,alpha,s}.
  double deficit = 0.0;
  /// J_alpha(u_lambda) = int int I_alpha(x-y) |x|^{-(N+alpha)/2} |y|^{-(N+alpha)/2} |psi(x) - psi(y)|^2.
  double remainder_J = 0.0;
  /// R_s(u_lambda) for 0 < s < 2, the local gradient remainder for s = 2, absent for s = 0.
  std::optional<double> remainder_R;
  /// ||u||^2, ||grad u||^2 or ||u||^2_{H^{s/2}} according to s.
  double denominator = 0.0;
  /// Relative residual of the groundstate identity assembled from the same terms.
  double closure_residual = 0.0;
  double err_budget = 0.0;
};

struct SweepCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SweepResult {
  InequalityParams params;
  double sharp_constant = 0.0;
  std::vector<SweepRow> rows;
  std::vector<SweepCheck> checks;
  bool all_pass() const;
};

SweepRow rayleigh_quotient(const InequalityParams& params, double lambda, const QuadratureSpec& spec = {});

/// Rows for an increasing lambda grid together with the post-hoc checks: bounded remainders
/// over the last three rows (max/min <= 3), increasing denominator, decreasing deficit,
/// quotient below the sharp constant, deficit * ln(lambda) within a factor 3, and closure
/// of the identity on every row. Rows may be computed concurrently; output order follows lambdas.
SweepResult sharpness_sweep(const InequalityParams& params, const std::vector<double>& lambdas,
                            const QuadratureSpec& spec = {}, bool concurrent = true);

/// The default grid 1, 10, ..., 10^4.
std::vector<double> default_lambdas();

}  // namespace hardy
