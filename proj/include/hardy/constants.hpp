#pragma once

#include "hardy/params.hpp"

namespace hardy {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Riesz potential normalization A_alpha = Gamma((N-alpha)/2) / (2^alpha pi^{N/2} Gamma(alpha/2)),
/// chosen so that the potentials compose as a semigroup.
double riesz_normalization(int dimension, double alpha);

/// Normalization D_{N,s} of the homogeneous H^{s/2} seminorm, 0 < s < 2.
double seminorm_normalization(int dimension, double s);

/// Sharp constant of the weighted Riesz bilinear form against the L^2 norm (s = 0),
/// the gradient norm (s = 2) or the H^{s/2} seminorm (0 < s < 2):
///
///   C_{N,alpha,s} = 2^{-(alpha+s)} [Gamma((N-s)/4) Gamma((N-alpha)/4) /
///                                    (Gamma((N+s)/4) Gamma((N+alpha)/4))]^2
///
/// Gamma ratios are combined in log space and exponentiated once.
double sharp_constant(const InequalityParams& params);

/// The L^2 constant written in its own closed form, 2^{-alpha} [Gamma((N-alpha)/4)/Gamma((N+alpha)/4)]^2.
double l2_sharp_constant(int dimension, double alpha);

/// The gradient constant written in its own closed form,
/// 2^{2-alpha} [Gamma((N-alpha)/4) / ((N-2) Gamma((N+alpha)/4))]^2, N >= 3.
double gradient_sharp_constant(int dimension, double alpha);

/// Fractional Hardy constant (the alpha = 0 member): 2^{-s} [Gamma((N-s)/4)/Gamma((N+s)/4)]^2.
double fractional_hardy_constant(int dimension, double s);

/// Classical Hardy constant ((N-2)/2)^2.
double local_hardy_constant(int dimension);

/// c such that (I_alpha * |.|^{-beta})(x) = c |x|^{alpha-beta}, for 0 < alpha < beta < N.
double riesz_power_law_constant(int dimension, double alpha, double beta);

/// |S^{N-1}| = 2 pi^{N/2} / Gamma(N/2); equals 2 for N = 1.
double sphere_area(int dimension);

}  // namespace hardy
