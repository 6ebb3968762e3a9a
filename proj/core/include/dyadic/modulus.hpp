#pragma once

#include <utility>
#include <vector>

#include "dyadic/fractal_curve.hpp"
#include "dyadic/frame.hpp"

namespace dyadic {

struct ModulusOptions {
  /// Quadratic cost guard; raise explicitly for finer grids.
  unsigned max_resolution = 14;
};

/// Dyadic modulus of continuity w(f, 2^-n): max over grid points x and
/// offsets 0 < y < 2^-n of |f(x (+) y) - f(x)|, with (+) as XOR on grid
/// indices (never leaves the frame). Needs resolution > n.
double dyadic_modulus(const SequenceFrame& frame, unsigned n,
                      const ModulusOptions& options = {});

/// Same for vector-valued curve samples, with Euclidean norms.
double dyadic_modulus(const CurveSamples& curve, unsigned n,
                      const ModulusOptions& options = {});

struct HolderFit {
  double slope = 0.0;
  /// All moduli were zero: no finite exponent (locally constant function).
  bool locally_constant = false;
};

/// Least-squares slope of -log2(w) against n over the finest half of the
/// scales (at least 3 points). Input pairs are (n, w(2^-n)).
HolderFit empirical_holder(std::vector<std::pair<unsigned, double>> moduli);

}  // namespace dyadic
