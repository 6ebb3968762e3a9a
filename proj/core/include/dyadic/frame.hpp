#pragma once

#include <cstdint>
#include <vector>

#include "dyadic/dyadic_rational.hpp"
#include "dyadic/sequence.hpp"

namespace dyadic {

/// Function sampled on the grid {k * 2^-resolution : 0 <= k < support_bound *
/// 2^resolution}. Everything outside [0, support_bound) is zero by
/// construction.
struct SequenceFrame {
  Mode mode = Mode::dyadic;
  unsigned resolution = 0;
  std::uint64_t support_bound = 1;  // M
  std::vector<double> values;       // size M * 2^resolution

  std::uint64_t point_count() const { return values.size(); }

  double value_at(std::uint64_t index) const {
    return index < values.size() ? values[index] : 0.0;
  }

  DyadicRational point(std::uint64_t index) const {
    return DyadicRational::from_grid_index(index, resolution);
  }
};

}  // namespace dyadic
