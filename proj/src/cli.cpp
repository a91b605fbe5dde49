#include "ssf/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ssf/analysis.hpp"
#include "ssf/error.hpp"
#include "ssf/io.hpp"
#include "ssf/lp.hpp"
#include "ssf/measure.hpp"
#include "ssf/mesh.hpp"
#include "ssf/presets.hpp"
#include "ssf/solver.hpp"

namespace ssf::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string input;
  std::string preset;
  std::string out_path;
  bool json = false;
  bool strict = false;
  double tol = kDefaultConditionTolerance;
};

struct Loaded {
  SimilaritySystem system;
  std::string label;
};

Loaded load(const Common& common) {
  if (!common.preset.empty() && !common.input.empty()) {
    throw Error(ErrorCode::ParseError, "give either a parameter file or --preset, not both");
  }
  if (!common.preset.empty()) {
    const PresetId id = parse_preset(common.preset);
    return {make_preset(id), to_string(id)};
  }
  if (common.input.empty()) throw Error(ErrorCode::ParseError, "no input: pass a parameter file or --preset");
  return {SimilaritySystem(read_params_file(common.input)), common.input};
}

std::vector<Exponent> parse_exponents(const std::string& text) {
  std::vector<Exponent> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(Exponent::parse(token));
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty exponent list");
  return out;
}

/// 6 significant digits for people.
std::string human(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void add_common(CLI::App* sub, Common& common, bool with_tol = false) {
  sub->add_option("input", common.input, "Parameter file (JSON)");
  sub->add_option("--preset", common.preset, "Named preset instead of a file, e.g. cantor_family:1/3,0");
  sub->add_option("-o,--out", common.out_path, "Write the main output here instead of stdout");
  sub->add_flag("--json", common.json, "Machine-readable JSON report");
  sub->add_flag("--strict", common.strict, "Exit 1 when a verdict fails");
  if (with_tol) sub->add_option("--tol", common.tol, "Residual tolerance for condition checks");
}

int cmd_validate(const Common& common, const std::string& p_list, std::ostream& out) {
  const Loaded loaded = load(common);
  const auto& system = loaded.system;
  std::vector<ContractionReport> reports;
  for (const Exponent& p : parse_exponents(p_list)) reports.push_back(contraction_factor(system, p));

  std::ostringstream os;
  if (common.json) {
    json doc{{"input", loaded.label}, {"valid", true}, {"n", system.n()}, {"partition", to_json(system.partition())}};
    doc["contraction"] = json::array();
    for (const auto& r : reports) doc["contraction"].push_back(to_json(r));
    os << dump(doc);
  } else {
    os << "valid: n = " << system.n() << "\nalpha:";
    for (double a : system.alpha()) os << ' ' << human(a);
    os << '\n';
    for (const auto& r : reports) {
      os << "r_" << r.p.to_string() << " = " << human(r.r_p) << (r.contractive ? "  contractive" : "  NOT contractive")
         << '\n';
    }
  }
  write_atomically(common.out_path, os.str(), out);
  return kExitOk;
}

SolveOptions solve_options(const std::string& p_text, double target, std::size_t max_iterations,
                           std::size_t max_pieces) {
  SolveOptions options;
  options.p = Exponent::parse(p_text);
  options.target_error = target;
  options.max_iterations = max_iterations;
  options.max_pieces = max_pieces;
  return options;
}

int cmd_solve(const Common& common, const SolveOptions& options, std::ostream& out) {
  const Loaded loaded = load(common);
  const SolveResult result = solve(loaded.system, options);

  std::ostringstream csv;
  csv << "# input=" << loaded.label << '\n'
      << "# p=" << options.p.to_string() << '\n'
      << "# iterations=" << result.iterations << '\n'
      << "# certified_error=" << format_real(result.aposteriori_error) << '\n'
      << "# status=" << to_string(result.status) << '\n';
  write_breakpoint_csv(csv, result.approximant);

  if (common.json) {
    if (!common.out_path.empty()) write_atomically(common.out_path, csv.str(), out);
    json doc = solve_summary_json(result, options.p);
    doc["input"] = loaded.label;
    out << dump(doc);
  } else {
    write_atomically(common.out_path, csv.str(), out);
  }
  return kExitOk;
}

int cmd_eval(const Common& common, const std::string& code_text, const std::string& end_text, std::ostream& out) {
  const Loaded loaded = load(common);
  if (end_text != "left" && end_text != "right") throw Error(ErrorCode::ParseError, "--end must be left or right");
  const End end = end_text == "left" ? End::left : End::right;
  const SegmentCode code = SegmentCode::parse(code_text);
  const Segment seg = code_to_segment(loaded.system, code);
  const BoundaryAnchors anchors = boundary_anchors(loaded.system);
  const double value = exact_value_at_code_point(loaded.system, anchors, code, end);
  const double x = end == End::left ? seg.left : seg.right;

  std::ostringstream os;
  if (common.json) {
    os << dump(json{{"input", loaded.label},
                    {"code", code.letters()},
                    {"end", end_text},
                    {"segment", {seg.left, seg.right}},
                    {"x", x},
                    {"value", value}});
  } else {
    os << "f(" << human(x) << (end == End::left ? "+" : "-") << ") = " << human(value) << '\n';
  }
  write_atomically(common.out_path, os.str(), out);
  return kExitOk;
}

int cmd_norms(const Common& common, const std::string& p_list, double target, std::size_t max_pieces,
              std::ostream& out) {
  const Loaded loaded = load(common);
  json rows = json::array();
  std::ostringstream os;
  bool violated = false;
  for (const Exponent& p : parse_exponents(p_list)) {
    json row{{"p", p.to_string()}};
    try {
      const NormBound bound = norm_bound(loaded.system, p);
      SolveOptions options;
      options.p = p;
      options.target_error = target;
      options.max_pieces = max_pieces;
      const SolveResult result = solve(loaded.system, options);
      const double measured = lp_norm(result.approximant, p);
      const bool ok = measured <= bound.bound + result.aposteriori_error;
      violated = violated || !ok;
      row = to_json(bound);
      row["measured"] = measured;
      row["certified_error"] = result.aposteriori_error;
      row["within_bound"] = ok;
      os << "p = " << p.to_string() << ": bound " << human(bound.bound) << ", measured " << human(measured)
         << " (+/- " << human(result.aposteriori_error) << ")" << (ok ? "" : "  VIOLATED") << '\n';
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotContractive && e.code() != ErrorCode::NotContractiveAtSomeS) throw;
      row["error"] = e.what();
      os << "p = " << p.to_string() << ": " << e.what() << '\n';
    }
    rows.push_back(row);
  }
  if (common.json) {
    write_atomically(common.out_path, dump(json{{"input", loaded.label}, {"norms", rows}}), out);
  } else {
    write_atomically(common.out_path, os.str(), out);
  }
  return common.strict && violated ? kExitVerdictFails : kExitOk;
}

void print_verdict(std::ostream& os, const RegularityVerdict& v) {
  os << to_string(v.kind) << ": " << to_string(v.verdict) << '\n';
  for (const auto& w : v.witnesses) {
    os << "  " << w.condition;
    if (w.index) os << " k=" << w.index;
    if (w.location) os << " at x=" << human(*w.location);
    os << " residual " << human(w.residual);
    if (!w.detail.empty()) os << " (" << w.detail << ")";
    os << '\n';
  }
}

int cmd_check(const Common& common, std::size_t depth, std::ostream& out) {
  const Loaded loaded = load(common);
  const RegularityVerdict continuity = continuity_check(loaded.system, common.tol);
  json doc{{"input", loaded.label}, {"continuity", to_json(continuity)}};
  std::ostringstream os;
  print_verdict(os, continuity);
  bool fails = continuity.verdict == Verdict::fails;
  try {
    const RegularityVerdict monotone = monotonicity_classify(loaded.system, {common.tol, depth, {}});
    doc["monotonicity"] = to_json(monotone);
    print_verdict(os, monotone);
    fails = fails || monotone.verdict == Verdict::fails;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Unbounded) throw;
    doc["monotonicity"] = json{{"kind", "monotonicity"}, {"verdict", "not_applicable"}, {"error", e.what()}};
    os << "monotonicity: not applicable (" << e.what() << ")\n";
  }
  write_atomically(common.out_path, common.json ? dump(doc) : os.str(), out);
  return common.strict && fails ? kExitVerdictFails : kExitOk;
}

int cmd_variation(const Common& common, std::size_t depth, std::ostream& out) {
  const Loaded loaded = load(common);
  const double variation = variation_on_mesh(loaded.system, depth);
  json doc{{"input", loaded.label}, {"depth", depth}, {"variation", variation}};
  std::ostringstream os;
  bool fails = false;
  try {
    const VariationCriterion criterion = variation_criterion(loaded.system, common.tol);
    doc["D"] = criterion.D;
    doc["verdict"] = to_json(criterion.verdict);
    doc["bounded_variation"] = criterion.verdict.verdict == Verdict::holds;
    fails = criterion.verdict.verdict == Verdict::fails;
    os << "D = " << human(criterion.D) << '\n'
       << "verdict: " << (fails ? "unbounded variation" : "bounded variation") << '\n';
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PreconditionViolated) throw;
    double D = 0.0;
    for (double v : loaded.system.d()) D += std::abs(v);
    doc["D"] = D;
    doc["verdict"] = json{{"kind", "bounded_variation"}, {"verdict", "not_applicable"}, {"error", e.what()}};
    os << "D = " << human(D) << "\nverdict: not applicable (" << e.what() << ")\n";
  }
  os << "Var_T" << depth << " = " << human(variation) << '\n';
  write_atomically(common.out_path, common.json ? dump(doc) : os.str(), out);
  return common.strict && fails ? kExitVerdictFails : kExitOk;
}

int cmd_measure(const Common& common, std::size_t depth, std::size_t samples, std::uint64_t seed, bool collapse,
                std::ostream& out) {
  const Loaded loaded = load(common);
  MeasureOptions options;
  options.collapse_zero_branches = collapse;
  options.tol = common.tol;
  const SelfSimilarMeasure measure = measure_from_function(loaded.system, options);

  std::ostringstream os;
  if (samples > 0) {
    write_samples(os, sample(measure, samples, depth, seed));
  } else {
    write_measure_csv(os, measure, enumerate_coded_intervals(measure, depth));
  }
  if (common.json) {
    if (!common.out_path.empty()) write_atomically(common.out_path, os.str(), out);
    json weights = json::array();
    json sources = json::array();
    for (const auto& b : measure.branches) {
      weights.push_back(b.weight);
      sources.push_back(b.source);
    }
    out << dump(json{{"input", loaded.label},
                     {"rho", weights},
                     {"source_segments", sources},
                     {"depth", depth},
                     {"cdf_residual", cdf_consistency(loaded.system, measure, std::min<std::size_t>(depth, 8))}});
  } else {
    write_atomically(common.out_path, os.str(), out);
  }
  return kExitOk;
}

int cmd_render(const Common& common, const SolveOptions& options, std::size_t samples, std::ostream& out) {
  const Loaded loaded = load(common);
  const SolveResult result = solve(loaded.system, options);
  std::ostringstream csv;
  csv << "# input=" << loaded.label << '\n'
      << "# iterations=" << result.iterations << '\n'
      << "# certified_error=" << format_real(result.aposteriori_error) << '\n';
  write_dense_csv(csv, result.approximant, samples);
  write_atomically(common.out_path, csv.str(), out);
  return kExitOk;
}

int cmd_preset(const std::string& spec, const std::string& out_path, std::ostream& out) {
  const PresetId id = parse_preset(spec);
  const SimilarityParams params = build_preset(id);
  validate(params);
  std::ostringstream os;
  write_params(os, params, to_string(id));
  write_atomically(out_path, os.str(), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine self-similar functions on [0,1]: solve, evaluate, check, export"};
  app.name("ssf");
  app.require_subcommand(1, 1);

  Common common;
  std::string p_list = "1,2,inf";
  std::string p_single = "1";
  double target = 1e-8;
  std::size_t max_iterations = 200;
  std::size_t max_pieces = 10'000'000;
  std::size_t depth = 5;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  bool collapse = false;
  std::string code_text;
  std::string end_text = "left";
  std::string preset_spec;

  auto* validate_cmd = app.add_subcommand("validate", "Check a parameter set and report contraction factors");
  add_common(validate_cmd, common);
  validate_cmd->add_option("--p", p_list, "Comma-separated exponents (1.5, inf, ...)");

  auto add_solve_flags = [&](CLI::App* sub) {
    sub->add_option("--p", p_single, "Norm used for the certified error");
    sub->add_option("--target-error", target, "Certified error to reach");
    sub->add_option("--max-iterations", max_iterations, "Iteration limit");
    sub->add_option("--max-pieces", max_pieces, "Piece-count cap for iterates");
  };
  auto* solve_cmd = app.add_subcommand("solve", "Iterate to the fixed point and export breakpoints as CSV");
  add_common(solve_cmd, common);
  add_solve_flags(solve_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Exact value of the fixed point at a code point");
  add_common(eval_cmd, common);
  eval_cmd->add_option("--code", code_text, "Segment code, e.g. 1,3")->required();
  eval_cmd->add_option("--end", end_text, "left or right end of the segment");

  auto* norms_cmd = app.add_subcommand("norms", "Norm bounds next to measured approximant norms");
  add_common(norms_cmd, common);
  std::string norms_p = "1,2,3,1.5,2.5,inf";
  double norms_target = 1e-6;
  std::size_t norms_pieces = 1'000'000;
  norms_cmd->add_option("--p", norms_p, "Comma-separated exponents");
  norms_cmd->add_option("--target-error", norms_target, "Certified error for the measured norms");
  norms_cmd->add_option("--max-pieces", norms_pieces, "Piece-count cap for iterates");

  auto* check_cmd = app.add_subcommand("check", "Continuity and monotonicity verdicts");
  add_common(check_cmd, common, true);
  check_cmd->add_option("--depth", depth, "Mesh depth of the monotonicity scan");

  auto* variation_cmd = app.add_subcommand("variation", "D, the bounded-variation verdict and Var over T_m");
  add_common(variation_cmd, common, true);
  variation_cmd->add_option("--depth", depth, "Mesh depth m");

  auto* measure_cmd = app.add_subcommand("measure", "Export the induced self-similar measure or samples from it");
  add_common(measure_cmd, common, true);
  measure_cmd->add_option("--depth", depth, "Code length");
  measure_cmd->add_option("--samples", samples, "Draw this many samples instead of listing intervals");
  measure_cmd->add_option("--seed", seed, "Sampling seed");
  measure_cmd->add_flag("--collapse", collapse, "Drop zero-weight branches instead of rejecting");

  std::size_t render_samples = 1025;
  auto* render_cmd = app.add_subcommand("render", "Dense samples of the approximant for plotting");
  add_common(render_cmd, common);
  add_solve_flags(render_cmd);
  render_cmd->add_option("--samples", render_samples, "Number of equally spaced points");

  std::string preset_out;
  auto* preset_cmd = app.add_subcommand("preset", "Write a named preset as a parameter file");
  preset_cmd->add_option("spec", preset_spec, "Preset, e.g. cantor_family:1/3,0")->required();
  preset_cmd->add_option("-o,--out", preset_out, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ssf: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*validate_cmd) return cmd_validate(common, p_list, out);
    if (*solve_cmd) return cmd_solve(common, solve_options(p_single, target, max_iterations, max_pieces), out);
    if (*eval_cmd) return cmd_eval(common, code_text, end_text, out);
    if (*norms_cmd) return cmd_norms(common, norms_p, norms_target, norms_pieces, out);
    if (*check_cmd) return cmd_check(common, depth, out);
    if (*variation_cmd) return cmd_variation(common, depth, out);
    if (*measure_cmd) return cmd_measure(common, depth, samples, seed, collapse, out);
    if (*render_cmd) {
      return cmd_render(common, solve_options(p_single, target, max_iterations, max_pieces), render_samples, out);
    }
    if (*preset_cmd) return cmd_preset(preset_spec, preset_out, out);
  } catch (const Error& e) {
    err << "ssf: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "ssf: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ssf::cli
