#include "dyadic/dyadic_rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dyadic/errors.hpp"

namespace dyadic {

namespace {

constexpr std::uint64_t kNumeratorBound = std::uint64_t{1} << 63;

}  // namespace

DyadicRational::DyadicRational(std::uint64_t numerator, unsigned scale)
    : numerator_(numerator), scale_(scale) {
  if (numerator_ >= kNumeratorBound) {
    throw ArithmeticOverflow("dyadic rational numerator exceeds 2^63");
  }
  if (scale_ > 63) {
    throw ArithmeticOverflow("dyadic rational scale exceeds 63");
  }
  while (scale_ > 0 && (numerator_ & 1u) == 0) {
    numerator_ >>= 1;
    --scale_;
  }
}

DyadicRational DyadicRational::from_grid_index(std::uint64_t k, unsigned resolution) {
  return {k, resolution};
}

double DyadicRational::value() const {
  return std::ldexp(static_cast<double>(numerator_), -static_cast<int>(scale_));
}

std::strong_ordering DyadicRational::operator<=>(const DyadicRational& other) const {
  // Compare numerator / 2^scale values via 128-bit cross scaling.
  const unsigned common = std::max(scale_, other.scale_);
  const unsigned __int128 a =
      static_cast<unsigned __int128>(numerator_) << (common - scale_);
  const unsigned __int128 b =
      static_cast<unsigned __int128>(other.numerator_) << (common - other.scale_);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

DyadicRational dyadic_add(const DyadicRational& x, const DyadicRational& y) {
  const unsigned common = std::max(x.scale(), y.scale());
  const unsigned sx = common - x.scale();
  const unsigned sy = common - y.scale();
  if ((sx > 0 && x.numerator() > (kNumeratorBound - 1) >> sx) ||
      (sy > 0 && y.numerator() > (kNumeratorBound - 1) >> sy)) {
    throw ArithmeticOverflow("aligned numerator exceeds 2^63 in dyadic addition");
  }
  const std::uint64_t aligned = (x.numerator() << sx) ^ (y.numerator() << sy);
  return {aligned, common};
}

double dyadic_distance(const DyadicRational& x, const DyadicRational& y) {
  return dyadic_add(x, y).value();
}

std::vector<DyadicRational> dyadic_grid(unsigned resolution, std::uint64_t support) {
  if (support == 0) {
    throw Error("grid support must be at least 1");
  }
  if (resolution > 62 || support > (std::uint64_t{1} << (62 - resolution))) {
    throw ResourceLimit("grid too fine for 64-bit indices");
  }
  const std::uint64_t count = support << resolution;
  if (count > (std::uint64_t{1} << 26)) {
    throw ResourceLimit("grid larger than 2^26 points");
  }
  std::vector<DyadicRational> grid;
  grid.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    grid.push_back(DyadicRational::from_grid_index(k, resolution));
  }
  return grid;
}

std::string to_exact_decimal(const DyadicRational& x) {
  const unsigned s = x.scale();
  std::string out = std::to_string(x.numerator() >> s);
  if (s == 0) return out;
  out.push_back('.');
  // Fractional digits: repeatedly multiply the remainder by 10. A canonical
  // value has an odd numerator, so the expansion uses exactly `s` digits.
  unsigned __int128 rem = x.numerator() & ((std::uint64_t{1} << s) - 1);
  for (unsigned i = 0; i < s; ++i) {
    rem *= 10;
    out.push_back(static_cast<char>('0' + static_cast<int>(rem >> s)));
    rem &= (static_cast<unsigned __int128>(1) << s) - 1;
  }
  return out;
}

}  // namespace dyadic
