#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "ssf/analysis.hpp"
#include "ssf/measure.hpp"
#include "ssf/piecewise.hpp"
#include "ssf/solver.hpp"
#include "ssf/system.hpp"

namespace ssf {

/// Parameter file (JSON):
///   { "format": "ssf-params/1", "name": "...", "n": 3,
///     "a": [...], "c": [...], "d": [...], "beta": [...] }
/// "format" and "name" are optional on input. Reals are written in shortest
/// round-trip form (at most 17 significant digits), so write/read is exact.
SimilarityParams params_from_json(const nlohmann::json& doc);
nlohmann::ordered_json params_to_json(const SimilarityParams& params, const std::optional<std::string>& name = std::nullopt);

SimilarityParams read_params(std::istream& in);
SimilarityParams read_params_file(const std::string& path);
void write_params(std::ostream& out, const SimilarityParams& params,
                  const std::optional<std::string>& name = std::nullopt);

/// "%.17g".
std::string format_real(double value);

/// CSV "x,left,right" with one record per breakpoint (left = f(x-), right = f(x+)).
void write_breakpoint_csv(std::ostream& out, const PiecewiseLinearFn& f);

/// CSV "x,left,right" on `count` equally spaced points of [0,1].
void write_dense_csv(std::ostream& out, const PiecewiseLinearFn& f, std::size_t count);

/// CSV "code,left,right,mass" for every depth-m coded interval.
void write_measure_csv(std::ostream& out, const SelfSimilarMeasure& measure, const CodedIntervals& intervals);

/// One sample per line.
void write_samples(std::ostream& out, const std::vector<double>& samples);

nlohmann::json to_json(const ContractionReport& report);
nlohmann::json to_json(const NormBound& bound);
nlohmann::json to_json(const RegularityVerdict& verdict);
nlohmann::json to_json(const Partition& partition);
nlohmann::json solve_summary_json(const SolveResult& result, Exponent p);

/// Writes to `path` through a temporary file and rename; "-" or empty means `fallback`.
void write_atomically(const std::string& path, const std::string& content, std::ostream& fallback);

}  // namespace ssf
