#include "dyadic/jsr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dyadic/errors.hpp"

namespace dyadic {

double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

double spectral_radius(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0.0;
  if (m.rows() == 1) return std::abs(m(0, 0));
  // Cap by the Gelfand bounds |m| and |m^2|^{1/2}: both dominate rho and the
  // second one zeroes out the eigensolver noise on nilpotent products.
  const double rho = m.eigenvalues().cwiseAbs().maxCoeff();
  const double capped = std::min(rho, spectral_norm(m));
  return std::min(capped, std::sqrt(spectral_norm(m * m)));
}

namespace {

double kth_root(double x, unsigned k) {
  if (k == 1 || x == 0.0) return x;
  return std::pow(x, 1.0 / static_cast<double>(k));
}

struct SearchState {
  const Eigen::MatrixXd* a[2];
  unsigned max_depth;
  double beta;  // max(|A0|, |A1|), for subtree growth bounds
  std::vector<double> level_max;  // exact max norm per product length
  double lower = 0.0;
  std::string witness;
  std::string digits;
};

void search(SearchState& st, const Eigen::MatrixXd& product, unsigned length) {
  const double nrm = spectral_norm(product);
  st.level_max[length] = std::max(st.level_max[length], nrm);

  const double cand = kth_root(std::min(spectral_radius(product), nrm), length);
  if (cand > st.lower) {
    st.lower = cand;
    st.witness = st.digits;
  }

  if (length == st.max_depth) return;

  // A subtree is worth visiting only if some extension can still raise a
  // per-level maximum or the lower bound: every length-l extension P
  // satisfies |P| <= nrm * beta^{l-length} and rho(P)^{1/l} <= |P|^{1/l}.
  bool useful = false;
  double bound = nrm;
  for (unsigned l = length + 1; l <= st.max_depth && !useful; ++l) {
    bound *= st.beta;
    if (bound > st.level_max[l] || kth_root(bound, l) > st.lower) useful = true;
  }
  if (!useful) return;

  for (int d = 0; d < 2; ++d) {
    st.digits.push_back(static_cast<char>('0' + d));
    search(st, Eigen::MatrixXd(product * (*st.a[d])), length + 1);
    st.digits.pop_back();
  }
}

}  // namespace

JsrEstimate jsr_bounds(const Eigen::MatrixXd& a0, const Eigen::MatrixXd& a1,
                       unsigned max_depth) {
  if (a0.rows() != a0.cols() || a1.rows() != a1.cols() || a0.rows() != a1.rows()) {
    throw Error("jsr_bounds needs two square matrices of equal dimension");
  }
  if (max_depth < 1) throw Error("jsr_bounds needs max_depth >= 1");
  if (max_depth > 24) throw ResourceLimit("jsr_bounds depth limited to 24");

  const Eigen::Index dim = a0.rows();
  if (dim == 0) {
    return {0.0, 0.0, max_depth, ""};
  }
  if (dim == 1) {
    // Scalar pair: every product norm telescopes exactly, so both bounds
    // equal max(|a0|, |a1|) at any depth.
    const double m0 = std::abs(a0(0, 0));
    const double m1 = std::abs(a1(0, 0));
    const double v = std::max(m0, m1);
    return {v, v, max_depth, v == 0.0 ? "" : (m1 > m0 ? "1" : "0")};
  }

  SearchState st;
  st.a[0] = &a0;
  st.a[1] = &a1;
  st.max_depth = max_depth;
  st.beta = std::max(spectral_norm(a0), spectral_norm(a1));
  st.level_max.assign(max_depth + 1, 0.0);

  for (int d = 0; d < 2; ++d) {
    st.digits.push_back(static_cast<char>('0' + d));
    search(st, *st.a[d], 1);
    st.digits.pop_back();
  }

  double upper = std::numeric_limits<double>::infinity();
  for (unsigned l = 1; l <= max_depth; ++l) {
    upper = std::min(upper, kth_root(st.level_max[l], l));
  }
  // The roots of the two bound families may cross by a few ulps when the
  // true bounds coincide; the bracket stays ordered.
  return {std::min(st.lower, upper), upper, max_depth, st.witness};
}

HolderInterval holder_exponent(const JsrEstimate& estimate) {
  HolderInterval interval;
  interval.continuity_certified = estimate.upper < 1.0;
  if (estimate.lower <= 0.0) {
    interval.unbounded = true;
    interval.hi = std::numeric_limits<double>::infinity();
  } else {
    interval.hi = -std::log2(estimate.lower);
  }
  interval.lo = estimate.upper <= 0.0 ? std::numeric_limits<double>::infinity()
                                      : -std::log2(estimate.upper);
  return interval;
}

}  // namespace dyadic
