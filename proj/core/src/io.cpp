#include "dyadic/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dyadic/errors.hpp"

namespace dyadic {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return {buf, res.ptr};
}

void write_frame_csv(std::ostream& out, const SequenceFrame& frame) {
  out << "t,value\n";
  for (std::uint64_t k = 0; k < frame.values.size(); ++k) {
    out << to_exact_decimal(frame.point(k)) << ',' << format_double(frame.values[k])
        << '\n';
  }
}

void write_curve_csv(std::ostream& out, const CurveSamples& curve) {
  out << 't';
  for (Eigen::Index j = 0; j < curve.dimension(); ++j) {
    out << ",x" << (j + 1);
  }
  out << '\n';
  for (std::size_t k = 0; k < curve.points.size(); ++k) {
    out << to_exact_decimal(DyadicRational::from_grid_index(k, curve.depth));
    for (Eigen::Index j = 0; j < curve.dimension(); ++j) {
      out << ',' << format_double(curve.points[k](j));
    }
    out << '\n';
  }
}

void write_matrix_csv(std::ostream& out, const std::string& label,
                      const Eigen::MatrixXd& m) {
  out << "# " << label << " N=" << m.rows() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

namespace {

nlohmann::json json_number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::json jsr_json(const JsrEstimate& e) {
  return {{"lower", e.lower},
          {"upper", e.upper},
          {"depth", e.depth},
          {"witness", e.witness}};
}

}  // namespace

std::string jsr_to_json(const JsrEstimate& estimate) {
  return jsr_json(estimate).dump();
}

std::string verdict_to_json(const Verdict& verdict, int indent) {
  nlohmann::json j;
  j["necessary_ok"] = verdict.necessary_ok;

  j["rules"] = nlohmann::json::array();
  for (const RuleResult& rule : verdict.rules) {
    j["rules"].push_back({{"name", rule.name},
                          {"applied", rule.applied},
                          {"verdict", to_string(rule.verdict)},
                          {"detail", rule.detail}});
  }

  j["jsr"] = verdict.jsr ? jsr_json(*verdict.jsr) : nlohmann::json(nullptr);
  if (verdict.jsr_minimal) {
    j["jsr_minimal"] = jsr_json(verdict.jsr_minimal->jsr);
    j["jsr_minimal"]["dimension"] = verdict.jsr_minimal->dimension;
    j["jsr_minimal"]["heuristic"] = true;
  } else {
    j["jsr_minimal"] = nullptr;
  }

  if (verdict.holder) {
    j["holder"] = {{"lo", json_number_or_null(verdict.holder->lo)},
                   {"hi", json_number_or_null(verdict.holder->hi)},
                   {"continuity_certified", verdict.holder->continuity_certified},
                   {"unbounded", verdict.holder->unbounded}};
  } else {
    j["holder"] = nullptr;
  }

  if (verdict.probe) {
    nlohmann::json probe;
    probe["ratios"] = verdict.probe->ratios;
    probe["diffs"] = nlohmann::json::array();
    for (double d : verdict.probe->diffs) {
      probe["diffs"].push_back(json_number_or_null(d));
    }
    probe["fitted_ratio"] = json_number_or_null(verdict.probe->fitted_ratio);
    probe["verdict"] = to_string(verdict.probe->verdict);
    probe["overflow"] = verdict.probe->overflow;
    j["probe"] = probe;
  } else {
    j["probe"] = nullptr;
  }

  if (verdict.advisory.applicable) {
    j["gcd_advisory"] = {{"gcd", verdict.advisory.gcd},
                         {"conjectured_convergent",
                          verdict.advisory.conjectured_convergent},
                         {"note", verdict.advisory.note}};
  } else {
    j["gcd_advisory"] = nullptr;
  }

  j["overall"] = to_string(verdict.overall);
  j["deciding_rule"] = verdict.deciding_rule;
  j["warnings"] = verdict.warnings;
  return j.dump(indent);
}

void write_polyline_svg(std::ostream& out,
                        const std::vector<std::pair<double, double>>& points,
                        int width, int height) {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (!points.empty()) {
    xmin = xmax = points.front().first;
    ymin = ymax = points.front().second;
    for (const auto& [x, y] : points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;

  const double margin = 20.0;
  const double sx = (width - 2 * margin) / (xmax - xmin);
  const double sy = (height - 2 * margin) / (ymax - ymin);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\" stroke=\"#ccc\"/>\n";
  out << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out << ' ';
    const double px = margin + (points[i].first - xmin) * sx;
    const double py = height - margin - (points[i].second - ymin) * sy;
    out << format_double(px) << ',' << format_double(py);
  }
  out << "\"/>\n</svg>\n";
}

void write_frame_svg(std::ostream& out, const SequenceFrame& frame) {
  std::vector<std::pair<double, double>> points;
  points.reserve(frame.values.size());
  for (std::uint64_t k = 0; k < frame.values.size(); ++k) {
    points.emplace_back(frame.point(k).value(), frame.values[k]);
  }
  write_polyline_svg(out, points);
}

void write_curve_svg(std::ostream& out, const CurveSamples& curve, int cx, int cy) {
  const Eigen::Index d = curve.dimension();
  std::vector<std::pair<double, double>> points;
  points.reserve(curve.points.size());
  if (d == 1) {
    for (std::size_t k = 0; k < curve.points.size(); ++k) {
      points.emplace_back(std::ldexp(static_cast<double>(k),
                                     -static_cast<int>(curve.depth)),
                          curve.points[k](0));
    }
  } else {
    if (cx < 0 || cy < 0 || cx >= d || cy >= d) {
      throw Error("SVG projection coordinates out of range");
    }
    for (const auto& p : curve.points) {
      points.emplace_back(p(cx), p(cy));
    }
  }
  write_polyline_svg(out, points);
}

std::vector<double> parse_mask_list(const std::string& text) {
  std::vector<double> values;
  std::string token;
  std::stringstream stream(text);
  while (std::getline(stream, token, ',')) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(end[-1]))) --end;
    double v = 0.0;
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end || begin == end) {
      throw ParseError("not a decimal number: '" + token + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw ParseError("empty coefficient list");
  return values;
}

AffinePair parse_affine_pair(std::istream& in) {
  std::vector<double> numbers;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::stringstream stream(line);
    double v = 0.0;
    while (stream >> v) numbers.push_back(v);
  }
  if (numbers.empty()) throw ParseError("empty affine pair file");

  const double draw = numbers.front();
  const auto d = static_cast<Eigen::Index>(draw);
  if (draw != static_cast<double>(d) || d < 1 || d > 64) {
    throw ParseError("first number must be the dimension (1..64)");
  }
  const std::size_t expected = 1 + 2 * static_cast<std::size_t>(d) *
                                       static_cast<std::size_t>(d + 1);
  if (numbers.size() != expected) {
    throw ParseError("affine pair file needs exactly " + std::to_string(expected) +
                     " numbers for dimension " + std::to_string(d) + ", got " +
                     std::to_string(numbers.size()));
  }

  std::size_t pos = 1;
  auto read_operator = [&]() {
    AffineOperator op;
    op.linear.resize(d, d);
    op.translation.resize(d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) op.linear(i, j) = numbers[pos++];
      op.translation(i) = numbers[pos++];
    }
    return op;
  };
  AffinePair pair;
  pair.a0 = read_operator();
  pair.a1 = read_operator();
  return pair;
}

}  // namespace dyadic
