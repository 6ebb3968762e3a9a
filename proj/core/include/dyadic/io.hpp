#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dyadic/criteria.hpp"
#include "dyadic/fractal_curve.hpp"
#include "dyadic/frame.hpp"
#include "dyadic/jsr.hpp"

namespace dyadic {

/// Shortest round-trip decimal form of a double (deterministic output).
std::string format_double(double v);

/// CSV with header "t,value"; t as the exact decimal of the grid point,
/// rows in increasing t.
void write_frame_csv(std::ostream& out, const SequenceFrame& frame);

/// CSV with header "t,x1,...,xd".
void write_curve_csv(std::ostream& out, const CurveSamples& curve);

/// Row-major CSV block with header "# <label> N=<dim>".
void write_matrix_csv(std::ostream& out, const std::string& label,
                      const Eigen::MatrixXd& m);

/// JSON object {lower, upper, depth, witness}.
std::string jsr_to_json(const JsrEstimate& estimate);

/// Full verdict as JSON with stable field names (necessary_ok, rules[],
/// jsr{...}, holder{lo,hi}, probe{ratios[],verdict}, overall, deciding_rule).
std::string verdict_to_json(const Verdict& verdict, int indent = 2);

/// SVG 1.1 polyline through (x, y) points, piecewise linear.
void write_polyline_svg(std::ostream& out,
                        const std::vector<std::pair<double, double>>& points,
                        int width = 800, int height = 500);

void write_frame_svg(std::ostream& out, const SequenceFrame& frame);
/// Projects the curve onto coordinates (cx, cy); with one-dimensional data
/// plots t against the single coordinate.
void write_curve_svg(std::ostream& out, const CurveSamples& curve, int cx = 0,
                     int cy = 1);

/// Comma-separated decimal list, e.g. "0.4,-0.1,0.6,1.1".
std::vector<double> parse_mask_list(const std::string& text);

/// Affine pair file: first line the dimension d, then for each of the two
/// operators d rows of d+1 numbers (linear part row, then the translation
/// component). Blank lines and '#' comments are ignored.
AffinePair parse_affine_pair(std::istream& in);

}  // namespace dyadic
