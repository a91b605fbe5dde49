#pragma once

#include <cstdint>
#include <vector>

#include "ssf/execution.hpp"
#include "ssf/mesh.hpp"
#include "ssf/system.hpp"

namespace ssf {

/// One contraction S(t) = left + length * t of [0,1] with its weight.
struct MeasureBranch {
  double left = 0.0;
  double length = 1.0;
  double right = 1.0;  // image of 1, pinned to the partition point
  double weight = 0.0;
  std::size_t source = 0;  // 1-based index of the generating segment in the system

  [[nodiscard]] double map(double t) const noexcept { return t == 1.0 ? right : length * t + left; }
};

/// mu = sum_k rho_k mu o S_k^{-1}. Codes address branches (1-based).
struct SelfSimilarMeasure {
  std::vector<MeasureBranch> branches;

  [[nodiscard]] std::size_t size() const noexcept { return branches.size(); }
};

struct MeasureOptions {
  /// Drop branches with d_k = 0 instead of rejecting the system.
  bool collapse_zero_branches = false;
  double tol = 1e-9;
};

/// rho_k = d_k for a nondecreasing, continuous, normalized system with c = 0.
/// Throws NotApplicable naming the violated precondition.
SelfSimilarMeasure measure_from_function(const SimilaritySystem& system, const MeasureOptions& options = {});

/// Product of the weights along the code; 1 for the empty code. Throws BadIndex.
double coded_interval_mass(const SelfSimilarMeasure& measure, const SegmentCode& code);

Segment coded_interval(const SelfSimilarMeasure& measure, const SegmentCode& code);

/// Every depth-m coded interval in code order (left to right).
struct CodedIntervals {
  std::size_t depth = 0;
  std::vector<double> left;
  std::vector<double> right;
  std::vector<double> mass;
  [[nodiscard]] std::size_t size() const noexcept { return mass.size(); }
};

CodedIntervals enumerate_coded_intervals(const SelfSimilarMeasure& measure, std::size_t depth,
                                         const MeshLimits& limits = {}, Execution execution = Execution::parallel);

/// max over depth-m codes of |mass - (f(right-) - f(left+))|, f the fixed
/// point of `system`.
double cdf_consistency(const SimilaritySystem& system, const SelfSimilarMeasure& measure, std::size_t depth,
                       const MeshLimits& limits = {});

/// Left endpoints of `count` codes of length `depth`, letters drawn with
/// probabilities rho. Samples are generated in blocks of 4096; block b uses
/// std::mt19937_64 seeded with splitmix64(seed + b), and each letter consumes
/// one 64-bit draw u = (x >> 11) * 2^-53 matched against cumulative weights.
/// Output is therefore independent of thread count.
std::vector<double> sample(const SelfSimilarMeasure& measure, std::size_t count, std::size_t depth,
                           std::uint64_t seed, Execution execution = Execution::parallel);

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace ssf
