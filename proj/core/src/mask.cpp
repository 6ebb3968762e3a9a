#include "dyadic/mask.hpp"

#include <cmath>

#include "dyadic/errors.hpp"

namespace dyadic {

Mask::Mask(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)), original_length_(coefficients_.size()) {
  if (coefficients_.empty()) {
    throw Error("mask needs at least one coefficient");
  }
  std::size_t len = 2;
  unsigned n = 1;
  while (len < coefficients_.size()) {
    len <<= 1;
    ++n;
    if (n > 20) throw ResourceLimit("mask longer than 2^20 coefficients");
  }
  padded_ = len != coefficients_.size();
  coefficients_.resize(len, 0.0);
  exponent_ = n;
}

double Mask::even_sum() const {
  double s = 0.0;
  for (std::size_t i = 0; i < coefficients_.size(); i += 2) s += coefficients_[i];
  return s;
}

double Mask::odd_sum() const {
  double s = 0.0;
  for (std::size_t i = 1; i < coefficients_.size(); i += 2) s += coefficients_[i];
  return s;
}

bool Mask::satisfies_sum_rule(double tol) const {
  return std::abs(even_sum() - 1.0) <= tol && std::abs(odd_sum() - 1.0) <= tol;
}

bool Mask::all_nonnegative() const {
  for (double c : coefficients_) {
    if (c < 0.0) return false;
  }
  return true;
}

bool Mask::all_positive() const {
  for (double c : coefficients_) {
    if (c <= 0.0) return false;
  }
  return true;
}

}  // namespace dyadic
