#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dyadic {

/// Exact point of the dyadic half-line: numerator / 2^scale with numerator >= 0.
///
/// Values are kept canonical (numerator odd, or scale == 0), so equality is
/// structural. Numerators are bounded by 2^63 and scales by 63; arithmetic
/// that would leave that range throws ArithmeticOverflow.
class DyadicRational {
public:
  constexpr DyadicRational() = default;
  DyadicRational(std::uint64_t numerator, unsigned scale);

  static DyadicRational from_integer(std::uint64_t k) { return {k, 0}; }
  /// The grid point k * 2^-resolution.
  static DyadicRational from_grid_index(std::uint64_t k, unsigned resolution);

  std::uint64_t numerator() const { return numerator_; }
  unsigned scale() const { return scale_; }
  bool is_zero() const { return numerator_ == 0; }

  /// Real value as a double (rounded for large scales, exact at desk scale).
  double value() const;

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  std::strong_ordering operator<=>(const DyadicRational& other) const;

private:
  std::uint64_t numerator_ = 0;
  unsigned scale_ = 0;
};

/// Digitwise binary addition: align both points to a common scale and XOR
/// the numerators. Self-inverse, commutative, associative.
DyadicRational dyadic_add(const DyadicRational& x, const DyadicRational& y);

/// Real value of x (+) y. Zero iff x == y; symmetric.
double dyadic_distance(const DyadicRational& x, const DyadicRational& y);

/// The grid {k * 2^-resolution : 0 <= k < support * 2^resolution} in
/// increasing order.
std::vector<DyadicRational> dyadic_grid(unsigned resolution, std::uint64_t support);

/// Exact decimal expansion, e.g. 13/2^3 -> "1.625". Always terminates
/// (2^-s has the finite expansion 5^s / 10^s).
std::string to_exact_decimal(const DyadicRational& x);

}  // namespace dyadic
