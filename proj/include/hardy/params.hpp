#pragma once

#include <string>

namespace hardy {

/// The triple (N, alpha, s) indexing every constant and functional.
///
/// Admissible values: N >= 1, 0 < alpha < N, 0 <= s <= 2 and s < N. The
/// endpoints s = 0 (L^2 form) and s = 2 (gradient form) are part of the family;
/// s = 2 then forces N >= 3. Construction throws DomainError otherwise.
class InequalityParams {
 public:
  InequalityParams(int dimension, double alpha, double s = 0.0);

  int dimension() const noexcept { return dimension_; }
  double alpha() const noexcept { return alpha_; }
  double s() const noexcept { return s_; }

  bool is_l2() const noexcept { return s_ == 0.0; }
  bool is_gradient() const noexcept { return s_ == 2.0; }
  bool is_fractional() const noexcept { return s_ > 0.0 && s_ < 2.0; }

  /// Exponent of the groundstate |x|^{-(N-s)/2}.
  double ground_exponent() const noexcept { return 0.5 * (dimension_ - s_); }

  std::string describe() const;

  friend bool operator==(const InequalityParams&, const InequalityParams&) = default;

 private:
  int dimension_;
  double alpha_;
  double s_;
};

}  // namespace hardy
