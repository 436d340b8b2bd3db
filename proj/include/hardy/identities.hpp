#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hardy/params.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/radial.hpp"

namespace hardy {

/// (N, alpha, s) as reported; alpha = 0 marks the local and fractional Hardy identities,
/// which sit outside the admissible InequalityParams range.
struct ReportParams {
  int dimension = 0;
  double alpha = 0.0;
  double s = 0.0;
  /// Second order of the semigroup and power-law checks.
  std::optional<double> beta;
  bool operator==(const ReportParams&) const = default;
};

/// One identity lhs = rhs_main + rhs_remainder, evaluated term by term.
struct VerificationReport {
  std::string identity_name;
  ReportParams params;
  std::string profile;
  double lhs = 0.0;
  double rhs_main = 0.0;
  double rhs_remainder = 0.0;
  double residual_rel = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double err_budget = 0.0;
  /// Radius with the largest deviation, for pointwise checks.
  std::optional<double> worst_radius;
};

/// Builds a report from its terms; the default tolerance is 10 * err_budget relative to |lhs|.
VerificationReport make_report(std::string name, ReportParams params, std::string profile, double lhs,
                               double rhs_main, double rhs_remainder, double err_budget,
                               std::optional<double> tol = std::nullopt);

/// C_{N,alpha,0} ||phi||^2 = weighted Riesz form (s = 0) + Riesz remainder with p = N/2.
VerificationReport verify_theorem_A_prime(const RadialProfile& phi, int dimension, double alpha,
                                          const QuadratureSpec& spec = {}, std::optional<double> tol = std::nullopt);

/// C_{N,alpha,2} (||grad phi||^2 - local remainder) = weighted Riesz form (s = 2)
/// + Riesz remainder with p = (N - 2)/2, N >= 3.
VerificationReport verify_theorem_B_prime(const RadialProfile& phi, int dimension, double alpha,
                                          const QuadratureSpec& spec = {}, std::optional<double> tol = std::nullopt);

/// D_{N,s} (seminorm integral - fractional remainder)
///   = (1/C_{N,alpha,s}) (weighted Riesz form + Riesz remainder with p = (N - s)/2).
/// The report stores the two right-hand terms already divided by C.
VerificationReport verify_theorem_C_prime(const RadialProfile& phi, const InequalityParams& params,
                                          const QuadratureSpec& spec = {}, std::optional<double> tol = std::nullopt);

/// ||phi||^2_{H^{s/2}} = C_{N,0,s}^{-1} int |phi|^2 |x|^{-s} + D_{N,s} * fractional remainder.
VerificationReport verify_fls_representation(const RadialProfile& phi, int dimension, double s,
                                             const QuadratureSpec& spec = {}, std::optional<double> tol = std::nullopt);

/// int |grad phi|^2 = ((N-2)/2)^2 int |phi|^2 |x|^{-2} + local remainder, N >= 3.
VerificationReport verify_local_hardy(const RadialProfile& phi, int dimension, const QuadratureSpec& spec = {},
                                      std::optional<double> tol = std::nullopt);

/// I_alpha(I_beta f) against I_{alpha+beta} f at each radius; the report holds the worst radius.
VerificationReport verify_semigroup(int dimension, double alpha, double beta, const RadialProfile& f,
                                    const std::vector<double>& radii, const QuadratureSpec& spec = {},
                                    std::optional<double> tol = std::nullopt);

/// Numerical I_alpha |x|^{-beta} against the closed-form constant times r^{alpha-beta}.
VerificationReport verify_riesz_power_law(int dimension, double alpha, double beta, const std::vector<double>& radii,
                                          const QuadratureSpec& spec = {}, std::optional<double> tol = std::nullopt);

/// Finite-dimensional groundstate identity: with V_i = (K u)_i / u_i,
///   sum V_i phi_i^2 = sum K_ij phi_i phi_j + (1/2) sum K_ij u_i u_j (phi_i/u_i - phi_j/u_j)^2.
/// Default tolerance 1e-12.
VerificationReport verify_discrete_groundstate(const std::vector<std::vector<double>>& K, const std::vector<double>& u,
                                               const std::vector<double>& phi,
                                               std::optional<double> tol = std::nullopt);

}  // namespace hardy
