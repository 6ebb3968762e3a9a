#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "dyadic/mask.hpp"

namespace dyadic {

/// The set I = {i : c_i > 0} of a nonnegative mask and its dyadic sums
/// I_N = I (+) 2I (+) ... (+) 2^{N-1} I.
struct IndexSet {
  std::vector<std::uint64_t> indices;  // sorted

  static IndexSet positive_indices(const Mask& mask);

  /// Exhaustive XOR-sum expansion; level(1) == indices.
  std::set<std::uint64_t> level(unsigned n) const;

  /// GCD of the nonzero elements (0 when there are none).
  std::uint64_t gcd() const;
};

}  // namespace dyadic
