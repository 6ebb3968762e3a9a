#include "dyadic/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dyadic/errors.hpp"

namespace dyadic {

namespace {

void check_scales(unsigned resolution, unsigned n, const ModulusOptions& options) {
  if (resolution > options.max_resolution) {
    throw ResourceLimit(
        "modulus computation is quadratic in the grid; raise max_resolution "
        "explicitly for grids finer than 2^-" +
        std::to_string(options.max_resolution));
  }
  if (n >= resolution) {
    throw Error("resolution too coarse: need sample spacing below 2^-n");
  }
}

}  // namespace

double dyadic_modulus(const SequenceFrame& frame, unsigned n,
                      const ModulusOptions& options) {
  check_scales(frame.resolution, n, options);
  const std::uint64_t offsets = std::uint64_t{1} << (frame.resolution - n);
  const std::uint64_t size = frame.values.size();
  double w = 0.0;
  for (std::uint64_t j = 1; j < offsets; ++j) {
    for (std::uint64_t x = 0; x < size; ++x) {
      w = std::max(w, std::abs(frame.values[x ^ j] - frame.values[x]));
    }
  }
  return w;
}

double dyadic_modulus(const CurveSamples& curve, unsigned n,
                      const ModulusOptions& options) {
  check_scales(curve.depth, n, options);
  const std::uint64_t offsets = std::uint64_t{1} << (curve.depth - n);
  const std::uint64_t size = curve.points.size();
  double w = 0.0;
  for (std::uint64_t j = 1; j < offsets; ++j) {
    for (std::uint64_t x = 0; x < size; ++x) {
      w = std::max(w, (curve.points[x ^ j] - curve.points[x]).norm());
    }
  }
  return w;
}

HolderFit empirical_holder(std::vector<std::pair<unsigned, double>> moduli) {
  std::erase_if(moduli, [](const auto& p) { return p.second <= 0.0; });
  if (moduli.empty()) {
    return {0.0, true};
  }
  if (moduli.size() < 3) {
    throw Error("empirical_holder needs at least 3 scales with positive moduli");
  }
  std::sort(moduli.begin(), moduli.end());
  const std::size_t keep = std::max<std::size_t>(3, (moduli.size() + 1) / 2);
  const std::size_t begin = moduli.size() - keep;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = begin; i < moduli.size(); ++i) {
    const double x = static_cast<double>(moduli[i].first);
    const double y = -std::log2(moduli[i].second);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const auto count = static_cast<double>(keep);
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) throw Error("empirical_holder needs distinct scales");
  return {(count * sxy - sx * sy) / denom, false};
}

}  // namespace dyadic
