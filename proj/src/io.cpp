#include "ssf/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ssf/error.hpp"

namespace ssf {

namespace {

std::vector<double> real_array(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  const auto& arr = doc.at(key);
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

nlohmann::json optional_real(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

}  // namespace

SimilarityParams params_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "parameter document must be a JSON object");
  SimilarityParams params{real_array(doc, "a"), real_array(doc, "c"), real_array(doc, "d"), real_array(doc, "beta")};
  if (doc.contains("n")) {
    const auto& n = doc.at("n");
    if (!n.is_number_integer()) throw Error(ErrorCode::ParseError, "field 'n' must be an integer");
    const auto declared = n.get<long long>();
    if (declared != static_cast<long long>(params.a.size())) {
      throw Error(ErrorCode::LengthMismatch,
                  "n = " + std::to_string(declared) + " but a has " + std::to_string(params.a.size()) + " entries");
    }
  } else {
    throw Error(ErrorCode::ParseError, "missing field 'n'");
  }
  return params;
}

nlohmann::ordered_json params_to_json(const SimilarityParams& params, const std::optional<std::string>& name) {
  nlohmann::ordered_json doc;
  doc["format"] = "ssf-params/1";
  if (name) doc["name"] = *name;
  doc["n"] = params.a.size();
  doc["a"] = params.a;
  doc["c"] = params.c;
  doc["d"] = params.d;
  doc["beta"] = params.beta;
  return doc;
}

SimilarityParams read_params(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return params_from_json(doc);
}

SimilarityParams read_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open parameter file '" + path + "'");
  return read_params(in);
}

void write_params(std::ostream& out, const SimilarityParams& params, const std::optional<std::string>& name) {
  out << params_to_json(params, name).dump(2) << '\n';
}

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_breakpoint_csv(std::ostream& out, const PiecewiseLinearFn& f) {
  out << "x,left,right\n";
  const auto x = f.breakpoints();
  for (std::size_t j = 0; j < x.size(); ++j) {
    out << format_real(x[j]) << ',' << format_real(f.left_limit(j)) << ',' << format_real(f.right_limit(j)) << '\n';
  }
}

void write_dense_csv(std::ostream& out, const PiecewiseLinearFn& f, std::size_t count) {
  out << "x,left,right\n";
  if (count < 2) count = 2;
  for (std::size_t i = 0; i < count; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(count - 1);
    out << format_real(x) << ',' << format_real(f.left_value(x)) << ',' << format_real(f.right_value(x)) << '\n';
  }
}

void write_measure_csv(std::ostream& out, const SelfSimilarMeasure& measure, const CodedIntervals& intervals) {
  out << "code,left,right,mass\n";
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const SegmentCode code = SegmentCode::from_index(i, measure.size(), intervals.depth);
    std::string word = code.to_string();
    for (char& ch : word) {
      if (ch == ',') ch = ' ';
    }
    out << word << ',' << format_real(intervals.left[i]) << ',' << format_real(intervals.right[i]) << ','
        << format_real(intervals.mass[i]) << '\n';
  }
}

void write_samples(std::ostream& out, const std::vector<double>& samples) {
  for (double v : samples) out << format_real(v) << '\n';
}

nlohmann::json to_json(const ContractionReport& report) {
  return {{"p", report.p.to_string()}, {"r_p", report.r_p}, {"contractive", report.contractive}};
}

nlohmann::json to_json(const NormBound& bound) {
  nlohmann::json components{{"pair_norms", bound.components.pair_norms},
                            {"factors", bound.components.factors},
                            {"r_p", optional_real(bound.components.r_p)},
                            {"C", optional_real(bound.components.constant_c)},
                            {"numerator", bound.components.numerator},
                            {"denominator", bound.components.denominator}};
  return {{"p", bound.p.to_string()}, {"bound", bound.bound}, {"components", components}};
}

nlohmann::json to_json(const RegularityVerdict& verdict) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : verdict.witnesses) {
    witnesses.push_back({{"condition", w.condition},
                         {"index", w.index},
                         {"location", optional_real(w.location)},
                         {"residual", w.residual},
                         {"detail", w.detail}});
  }
  return {{"kind", std::string(to_string(verdict.kind))},
          {"verdict", std::string(to_string(verdict.verdict))},
          {"witnesses", witnesses}};
}

nlohmann::json to_json(const Partition& partition) { return {{"alpha", partition.alpha}}; }

nlohmann::json solve_summary_json(const SolveResult& result, Exponent p) {
  return {{"p", p.to_string()},
          {"iterations", result.iterations},
          {"pieces", result.approximant.pieces()},
          {"contraction_q", result.contraction_q},
          {"aposteriori_error", result.aposteriori_error},
          {"last_step", result.last_step},
          {"status", std::string(to_string(result.status))}};
}

void write_atomically(const std::string& path, const std::string& content, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << content;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + temp.string() + "'");
    out << content;
    if (!out) throw Error(ErrorCode::ParseError, "write failed for '" + temp.string() + "'");
  }
  std::filesystem::rename(temp, target);
}

}  // namespace ssf
