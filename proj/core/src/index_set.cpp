#include "dyadic/index_set.hpp"

#include <numeric>

#include "dyadic/errors.hpp"

namespace dyadic {

IndexSet IndexSet::positive_indices(const Mask& mask) {
  IndexSet set;
  for (std::size_t i = 0; i < mask.length(); ++i) {
    if (mask.at(i) > 0.0) set.indices.push_back(i);
  }
  return set;
}

std::set<std::uint64_t> IndexSet::level(unsigned n) const {
  if (n == 0) throw Error("index set level starts at 1");
  std::set<std::uint64_t> cur(indices.begin(), indices.end());
  for (unsigned k = 1; k < n; ++k) {
    std::set<std::uint64_t> next;
    for (const std::uint64_t a : cur) {
      for (const std::uint64_t i : indices) {
        next.insert(a ^ (i << k));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::uint64_t IndexSet::gcd() const {
  std::uint64_t g = 0;
  for (const std::uint64_t i : indices) {
    g = std::gcd(g, i);
  }
  return g;
}

}  // namespace dyadic
