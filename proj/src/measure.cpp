#include "ssf/measure.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ssf/analysis.hpp"
#include "ssf/error.hpp"

namespace ssf {

namespace {

constexpr std::size_t kSampleBlock = 4096;

void not_applicable(const std::string& what) { throw Error(ErrorCode::NotApplicable, what); }

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SelfSimilarMeasure measure_from_function(const SimilaritySystem& system, const MeasureOptions& options) {
  if (!system.has_zero_drift()) {
    not_applicable(
        "zero_drift: c_k != 0 gives a measure with an absolutely continuous part, which is not constructed here");
  }
  for (double v : system.d()) {
    if (!(std::abs(v) < 1.0)) not_applicable("bounded: some |d_k| >= 1");
  }
  const BoundaryAnchors anchors = boundary_anchors(system);
  if (std::abs(anchors.f0) > options.tol || std::abs(anchors.f1 - 1.0) > options.tol) {
    std::ostringstream os;
    os << "normalized: need f(0)=0 and f(1)=1, got " << anchors.f0 << " and " << anchors.f1;
    not_applicable(os.str());
  }
  const RegularityVerdict monotone = monotonicity_classify(system, {options.tol, 8, {}});
  if (monotone.verdict != Verdict::holds) not_applicable("nondecreasing: monotonicity does not hold");

  double total = 0.0;
  for (double v : system.d()) total += v;
  if (std::abs(total - 1.0) > kPartitionSumTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "weights: sum d_k = " << total << " != 1 (the function has jumps)";
    not_applicable(os.str());
  }

  SelfSimilarMeasure measure;
  const auto alpha = system.alpha();
  for (std::size_t k = 0; k < system.n(); ++k) {
    const double weight = system.d()[k];
    if (weight == 0.0) {
      if (!options.collapse_zero_branches) {
        not_applicable("positive_weights: d_" + std::to_string(k + 1) + " = 0 (enable collapse to drop it)");
      }
      continue;
    }
    measure.branches.push_back({alpha[k], system.a()[k], alpha[k + 1], weight, k + 1});
  }
  if (measure.branches.size() < 2) not_applicable("branches: fewer than two branches with positive weight");
  return measure;
}

double coded_interval_mass(const SelfSimilarMeasure& measure, const SegmentCode& code) {
  code.check(measure.size());
  double mass = 1.0;
  for (std::uint32_t letter : code.letters()) mass *= measure.branches[letter - 1].weight;
  return mass;
}

Segment coded_interval(const SelfSimilarMeasure& measure, const SegmentCode& code) {
  code.check(measure.size());
  const auto& letters = code.letters();
  double left = 0.0;
  double right = 1.0;
  for (std::size_t i = letters.size(); i-- > 0;) {
    const MeasureBranch& b = measure.branches[letters[i] - 1];
    left = b.map(left);
    right = b.map(right);
  }
  return {left, right};
}

CodedIntervals enumerate_coded_intervals(const SelfSimilarMeasure& measure, std::size_t depth,
                                         const MeshLimits& limits, Execution execution) {
  const std::size_t n = measure.size();
  const std::uint64_t count = segment_count(n, depth, limits);
  CodedIntervals out;
  out.depth = depth;
  out.left.resize(count);
  out.right.resize(count);
  out.mass.resize(count);
  const auto count_i = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) if (execution == Execution::parallel && count > 4096)
  for (std::int64_t idx = 0; idx < count_i; ++idx) {
    const auto i = static_cast<std::size_t>(idx);
    const SegmentCode code = SegmentCode::from_index(i, n, depth);
    const Segment seg = coded_interval(measure, code);
    out.left[i] = seg.left;
    out.right[i] = seg.right;
    out.mass[i] = coded_interval_mass(measure, code);
  }
  return out;
}

double cdf_consistency(const SimilaritySystem& system, const SelfSimilarMeasure& measure, std::size_t depth,
                       const MeshLimits& limits) {
  const std::size_t n = measure.size();
  const std::uint64_t count = segment_count(n, depth, limits);
  const BoundaryAnchors anchors = boundary_anchors(system);
  double worst = 0.0;
  const auto count_i = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) reduction(max : worst) if (count > 4096)
  for (std::int64_t idx = 0; idx < count_i; ++idx) {
    const SegmentCode code = SegmentCode::from_index(static_cast<std::uint64_t>(idx), n, depth);
    std::vector<std::uint32_t> source(code.letters().size());
    for (std::size_t i = 0; i < source.size(); ++i) {
      source[i] = static_cast<std::uint32_t>(measure.branches[code.letters()[i] - 1].source);
    }
    const SegmentCode system_code(std::move(source));
    const double increment = exact_value_at_code_point(system, anchors, system_code, End::right) -
                             exact_value_at_code_point(system, anchors, system_code, End::left);
    worst = std::max(worst, std::abs(coded_interval_mass(measure, code) - increment));
  }
  return worst;
}

std::vector<double> sample(const SelfSimilarMeasure& measure, std::size_t count, std::size_t depth,
                           std::uint64_t seed, Execution execution) {
  if (depth < 1) throw Error(ErrorCode::DepthTooLarge, "sampling depth must be >= 1");
  const std::size_t n = measure.size();
  std::vector<double> cumulative(n);
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    acc += measure.branches[k].weight;
    cumulative[k] = acc;
  }
  for (double& v : cumulative) v /= acc;
  cumulative.back() = 1.0;

  std::vector<double> out(count);
  const std::size_t blocks = (count + kSampleBlock - 1) / kSampleBlock;
  const auto blocks_i = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(static) if (execution == Execution::parallel && blocks > 1)
  for (std::int64_t bi = 0; bi < blocks_i; ++bi) {
    const auto block = static_cast<std::size_t>(bi);
    std::mt19937_64 rng(splitmix64(seed + block));
    std::vector<std::size_t> letters(depth);
    const std::size_t begin = block * kSampleBlock;
    const std::size_t end = std::min(count, begin + kSampleBlock);
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < depth; ++j) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        letters[j] = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), n - 1);
      }
      double x = 0.0;
      for (std::size_t j = depth; j-- > 0;) x = measure.branches[letters[j]].map(x);
      out[i] = x;
    }
  }
  return out;
}

}  // namespace ssf
