#pragma once

#include <cstddef>
#include <vector>

namespace dyadic {

/// Finite coefficient sequence c_0..c_{L-1} defining a subdivision scheme.
///
/// The length is always a power of two >= 2; shorter input is zero-padded up
/// to the next power of two (original coefficients keep their indices).
class Mask {
public:
  explicit Mask(std::vector<double> coefficients);

  const std::vector<double>& coefficients() const { return coefficients_; }
  double at(std::size_t i) const { return coefficients_[i]; }

  std::size_t length() const { return coefficients_.size(); }  // L = 2^n
  unsigned exponent() const { return exponent_; }              // n
  std::size_t matrix_dimension() const { return length() / 2; }  // N = 2^{n-1}

  bool padded() const { return padded_; }
  std::size_t original_length() const { return original_length_; }

  double even_sum() const;
  double odd_sum() const;
  /// Both parity sums equal 1 within `tol` (the necessary condition for
  /// convergence and the invariance condition for the difference subspace).
  bool satisfies_sum_rule(double tol = 1e-9) const;

  bool all_nonnegative() const;
  bool all_positive() const;

private:
  std::vector<double> coefficients_;
  unsigned exponent_ = 1;
  std::size_t original_length_ = 0;
  bool padded_ = false;
};

}  // namespace dyadic
