// dstool: analyze, render and compare dyadic subdivision schemes.
//
// Subcommands:
//   analyze   convergence report for a mask (JSON on stdout)
//   cascade   refinable-function frame as CSV / SVG
//   fractal   dyadic fractal curve of an affine operator pair
//   compare   classical vs dyadic cascade side by side
//   presets   list the built-in example masks

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dyadic/criteria.hpp"
#include "dyadic/errors.hpp"
#include "dyadic/fractal_curve.hpp"
#include "dyadic/io.hpp"
#include "dyadic/mask.hpp"
#include "dyadic/modulus.hpp"
#include "dyadic/presets.hpp"
#include "dyadic/refinable.hpp"
#include "dyadic/subdivision.hpp"
#include "dyadic/transition.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDiverges = 2;
constexpr int kExitUndetermined = 3;

struct MaskSource {
  std::string list;
  std::string preset;
};

void add_mask_options(CLI::App* cmd, MaskSource& source) {
  auto* list = cmd->add_option("--mask", source.list,
                               "comma-separated mask coefficients, e.g. 0.4,-0.1,0.6,1.1");
  auto* preset = cmd->add_option("--preset", source.preset,
                                 "built-in example name (ex1..ex9; see `presets`)");
  list->excludes(preset);
  preset->excludes(list);
}

dyadic::Mask resolve_mask(const MaskSource& source) {
  if (!source.preset.empty()) {
    const dyadic::Preset* p = dyadic::find_preset(source.preset);
    if (!p) throw dyadic::ParseError("unknown preset '" + source.preset + "'");
    return dyadic::Mask(p->mask);
  }
  if (!source.list.empty()) {
    return dyadic::Mask(dyadic::parse_mask_list(source.list));
  }
  throw dyadic::ParseError("either --mask or --preset is required");
}

void write_file_or_stdout(const std::string& path,
                          const std::function<void(std::ostream&)>& writer) {
  if (path.empty() || path == "-") {
    writer(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dyadic::Error("cannot open '" + path + "' for writing");
  writer(out);
}

int run_analyze(const MaskSource& source, const dyadic::AnalyzeOptions& options,
                const std::string& matrices_out) {
  const dyadic::Mask mask = resolve_mask(source);
  const dyadic::Verdict verdict = dyadic::analyze(mask, options);
  std::cout << dyadic::verdict_to_json(verdict) << '\n';

  if (!matrices_out.empty()) {
    const dyadic::TransitionPair pair = dyadic::transition_matrices(mask);
    std::ofstream out(matrices_out, std::ios::binary);
    if (!out) throw dyadic::Error("cannot open '" + matrices_out + "' for writing");
    dyadic::write_matrix_csv(out, "T0", pair.t0);
    dyadic::write_matrix_csv(out, "T1", pair.t1);
  }

  switch (verdict.overall) {
    case dyadic::OverallVerdict::converges: return kExitOk;
    case dyadic::OverallVerdict::diverges: return kExitDiverges;
    default: return kExitUndetermined;
  }
}

int run_cascade(const MaskSource& source, unsigned iters, const std::string& mode_name,
                const std::string& out_path, const std::string& svg_path, bool force,
                unsigned probe_iters) {
  const dyadic::Mask mask = resolve_mask(source);
  const dyadic::Mode mode =
      mode_name == "classical" ? dyadic::Mode::classical : dyadic::Mode::dyadic;

  const dyadic::ProbeReport probe = dyadic::convergence_probe(mask, probe_iters, mode);
  if (probe.verdict == dyadic::ProbeVerdict::diverging && !force) {
    std::cerr << "refusing to render a diverging scheme (probe ratio "
              << dyadic::format_double(probe.fitted_ratio)
              << "); pass --force to override\n";
    return kExitDiverges;
  }

  dyadic::CascadeOptions cascade_options;
  cascade_options.max_depth = std::max(cascade_options.max_depth, iters);
  const dyadic::SequenceFrame frame = dyadic::cascade(mask, iters, mode, cascade_options);
  write_file_or_stdout(out_path,
                       [&](std::ostream& out) { dyadic::write_frame_csv(out, frame); });
  if (!svg_path.empty()) {
    std::ofstream svg(svg_path, std::ios::binary);
    if (!svg) throw dyadic::Error("cannot open '" + svg_path + "' for writing");
    dyadic::write_frame_svg(svg, frame);
  }
  return kExitOk;
}

int run_fractal(const std::string& pair_path, unsigned depth, unsigned jsr_depth,
                const std::string& out_path, const std::string& svg_path, int svg_x,
                int svg_y) {
  std::ifstream in(pair_path);
  if (!in) throw dyadic::ParseError("cannot open pair file '" + pair_path + "'");
  const dyadic::AffinePair pair = dyadic::parse_affine_pair(in);

  dyadic::CurveOptions options;
  options.jsr_depth = jsr_depth;
  options.max_depth = std::max(options.max_depth, depth);
  const dyadic::CurveSamples curve = dyadic::sample_curve(pair, depth, options);

  const dyadic::HolderInterval holder = dyadic::holder_exponent(curve.jsr);
  std::cerr << "jsr=[" << dyadic::format_double(curve.jsr.lower) << ','
            << dyadic::format_double(curve.jsr.upper) << "] holder=["
            << dyadic::format_double(holder.lo) << ','
            << dyadic::format_double(holder.hi) << "] depth=" << curve.jsr.depth
            << '\n';

  write_file_or_stdout(out_path,
                       [&](std::ostream& out) { dyadic::write_curve_csv(out, curve); });
  if (!svg_path.empty()) {
    std::ofstream svg(svg_path, std::ios::binary);
    if (!svg) throw dyadic::Error("cannot open '" + svg_path + "' for writing");
    dyadic::write_curve_svg(svg, curve, svg_x, svg_y);
  }
  return kExitOk;
}

int run_compare(const MaskSource& source, unsigned iters, const std::string& out_prefix,
                bool force, unsigned probe_iters) {
  const dyadic::Mask mask = resolve_mask(source);

  std::cout << "mode,probe_verdict,fitted_ratio,support_bound\n";
  for (const dyadic::Mode mode : {dyadic::Mode::classical, dyadic::Mode::dyadic}) {
    const dyadic::ProbeReport probe =
        dyadic::convergence_probe(mask, probe_iters, mode);
    const std::uint64_t bound =
        mode == dyadic::Mode::dyadic ? mask.matrix_dimension() : mask.length() - 1;
    std::cout << dyadic::to_string(mode) << ',' << dyadic::to_string(probe.verdict)
              << ',' << dyadic::format_double(probe.fitted_ratio) << ',' << bound
              << '\n';

    if (out_prefix.empty()) continue;
    if (probe.verdict == dyadic::ProbeVerdict::diverging && !force) {
      std::cerr << "skipping " << dyadic::to_string(mode)
                << " frame (diverging; pass --force to render anyway)\n";
      continue;
    }
    dyadic::CascadeOptions cascade_options;
    cascade_options.max_depth = std::max(cascade_options.max_depth, iters);
    const dyadic::SequenceFrame frame =
        dyadic::cascade(mask, iters, mode, cascade_options);
    const std::string path =
        out_prefix + "_" + dyadic::to_string(mode) + ".csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dyadic::Error("cannot open '" + path + "' for writing");
    dyadic::write_frame_csv(out, frame);
  }
  return kExitOk;
}

int run_presets() {
  std::cout << "name,coefficients,dyadic,classical,note\n";
  for (const dyadic::Preset& p : dyadic::presets()) {
    std::cout << p.name << ",\"";
    for (std::size_t i = 0; i < p.mask.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << dyadic::format_double(p.mask[i]);
    }
    auto expect = [](const std::optional<bool>& e) {
      return !e ? "unspecified" : (*e ? "converges" : "diverges");
    };
    std::cout << "\"," << expect(p.dyadic_converges) << ','
              << expect(p.classical_converges) << ",\"" << p.note << "\"\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dyadic subdivision scheme toolkit"};
  app.require_subcommand(1);

  MaskSource analyze_source;
  dyadic::AnalyzeOptions analyze_options;
  std::string matrices_out;
  auto* analyze = app.add_subcommand("analyze", "convergence report for a mask");
  add_mask_options(analyze, analyze_source);
  analyze->add_option("--tol", analyze_options.sum_rule_tol, "sum-rule tolerance");
  analyze->add_option("--jsr-depth", analyze_options.jsr_depth,
                      "product search depth for JSR bounds");
  analyze->add_option("--probe-iters", analyze_options.probe_iterations,
                      "cascade probe iterations");
  analyze->add_option("--nn-levels", analyze_options.nonnegative_max_level,
                      "max level for the nonnegative coverage criterion");
  analyze->add_option("--matrices-out", matrices_out,
                      "also dump the transition matrices as CSV to this path");

  MaskSource cascade_source;
  unsigned cascade_iters = 10;
  std::string cascade_mode = "dyadic";
  std::string cascade_out, cascade_svg;
  bool cascade_force = false;
  unsigned cascade_probe_iters = dyadic::kDefaultProbeIterations;
  auto* cascade = app.add_subcommand("cascade", "render the refinable function");
  add_mask_options(cascade, cascade_source);
  cascade->add_option("--iters", cascade_iters, "cascade iterations")
      ->check(CLI::Range(1u, 24u));
  cascade->add_option("--mode", cascade_mode, "dyadic | classical")
      ->check(CLI::IsMember({"dyadic", "classical"}));
  cascade->add_option("--out", cascade_out, "output CSV path (default stdout)");
  cascade->add_option("--svg", cascade_svg, "also write an SVG polyline");
  cascade->add_flag("--force", cascade_force, "render even when the probe diverges");
  cascade->add_option("--probe-iters", cascade_probe_iters, "probe iterations");

  std::string fractal_pair;
  unsigned fractal_depth = 12;
  unsigned fractal_jsr_depth = 12;
  std::string fractal_out, fractal_svg;
  int fractal_svg_x = 0;
  int fractal_svg_y = 1;
  auto* fractal = app.add_subcommand("fractal", "sample a dyadic fractal curve");
  fractal->add_option("pair", fractal_pair, "affine pair file")->required();
  fractal->add_option("--depth", fractal_depth, "sampling depth (2^depth points)")
      ->check(CLI::Range(1u, 22u));
  fractal->add_option("--jsr-depth", fractal_jsr_depth, "JSR search depth");
  fractal->add_option("--out", fractal_out, "output CSV path (default stdout)");
  fractal->add_option("--svg", fractal_svg, "also write an SVG polyline");
  fractal->add_option("--svg-x", fractal_svg_x, "SVG abscissa coordinate index");
  fractal->add_option("--svg-y", fractal_svg_y, "SVG ordinate coordinate index");

  MaskSource compare_source;
  unsigned compare_iters = 10;
  std::string compare_prefix;
  bool compare_force = false;
  unsigned compare_probe_iters = dyadic::kDefaultProbeIterations;
  auto* compare = app.add_subcommand("compare", "classical vs dyadic side by side");
  add_mask_options(compare, compare_source);
  compare->add_option("--iters", compare_iters, "cascade iterations")
      ->check(CLI::Range(1u, 24u));
  compare->add_option("--out-prefix", compare_prefix,
                      "write <prefix>_dyadic.csv and <prefix>_classical.csv");
  compare->add_flag("--force", compare_force, "render diverging frames too");
  compare->add_option("--probe-iters", compare_probe_iters, "probe iterations");

  auto* presets_cmd = app.add_subcommand("presets", "list the built-in masks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(analyze_source, analyze_options, matrices_out);
    if (*cascade) {
      return run_cascade(cascade_source, cascade_iters, cascade_mode, cascade_out,
                         cascade_svg, cascade_force, cascade_probe_iters);
    }
    if (*fractal) {
      return run_fractal(fractal_pair, fractal_depth, fractal_jsr_depth, fractal_out,
                         fractal_svg, fractal_svg_x, fractal_svg_y);
    }
    if (*compare) {
      return run_compare(compare_source, compare_iters, compare_prefix, compare_force,
                         compare_probe_iters);
    }
    if (*presets_cmd) return run_presets();
  } catch (const dyadic::ContinuityNotCertified& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDiverges;
  } catch (const dyadic::NoContractiveFixedPoint& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDiverges;
  } catch (const dyadic::NonConvergentScheme& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDiverges;
  } catch (const dyadic::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const dyadic::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
