#pragma once

#include <Eigen/Dense>

#include "dyadic/mask.hpp"

namespace dyadic {

/// The pair of N x N transition matrices of a mask (N = 2^{n-1}):
///   T0[i][j] = c_{2i (+) j},  T1[i][j] = c_{(2i+1) (+) j}   (0-based i, j).
struct TransitionPair {
  Eigen::MatrixXd t0;
  Eigen::MatrixXd t1;
  Mask mask;
};

TransitionPair transition_matrices(const Mask& mask);

/// T0, T1 restricted to the difference subspace X = {x : sum x_i = 0},
/// written in the basis {e_i - e_{i+1}}. Dimension (N-1) x (N-1).
struct RestrictedPair {
  Eigen::MatrixXd b0;
  Eigen::MatrixXd b1;
};

/// Throws InvarianceViolation when a column sum deviates from 1 beyond `tol`
/// (then X is not invariant and the restriction is meaningless).
RestrictedPair restrict_to_difference_subspace(const TransitionPair& pair,
                                               double tol = 1e-9);

/// The basis matrix U with columns e_i - e_{i+1} (N x (N-1)).
Eigen::MatrixXd difference_basis(Eigen::Index n);

}  // namespace dyadic
