#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ssf/exponent.hpp"

namespace ssf {

/// Raw similarity parameters as read from a parameter file. Not validated.
struct SimilarityParams {
  std::vector<double> a;     // segment lengths
  std::vector<double> c;     // linear drift
  std::vector<double> d;     // vertical contraction
  std::vector<double> beta;  // vertical offset
};

/// Partition points alpha_1 = 0 < ... < alpha_{n+1} = 1 (stored 0-based).
struct Partition {
  std::vector<double> alpha;

  [[nodiscard]] std::size_t segments() const noexcept { return alpha.empty() ? 0 : alpha.size() - 1; }
  [[nodiscard]] std::vector<double> lengths() const;
};

inline constexpr double kPartitionSumTolerance = 1e-12;

/// Checks the parameter invariants and returns the derived partition.
/// The last point is clamped to exactly 1.
Partition validate(const SimilarityParams& params);

/// Validated, immutable parameter set. Component accessors are 0-based.
class SimilaritySystem {
 public:
  explicit SimilaritySystem(SimilarityParams params);

  [[nodiscard]] std::size_t n() const noexcept { return params_.a.size(); }
  [[nodiscard]] const SimilarityParams& params() const noexcept { return params_; }
  [[nodiscard]] const Partition& partition() const noexcept { return partition_; }

  [[nodiscard]] std::span<const double> a() const noexcept { return params_.a; }
  [[nodiscard]] std::span<const double> c() const noexcept { return params_.c; }
  [[nodiscard]] std::span<const double> d() const noexcept { return params_.d; }
  [[nodiscard]] std::span<const double> beta() const noexcept { return params_.beta; }
  [[nodiscard]] std::span<const double> alpha() const noexcept { return partition_.alpha; }

  /// S_k(t) = a_k t + alpha_k with the endpoint images pinned to the
  /// partition points, so shared mesh points come out bit-identical.
  [[nodiscard]] double map_point(std::size_t k, double t) const noexcept {
    if (t == 1.0) return partition_.alpha[k + 1];
    return params_.a[k] * t + partition_.alpha[k];
  }

  [[nodiscard]] bool has_zero_drift() const noexcept;
  [[nodiscard]] double max_abs_d() const noexcept;

 private:
  SimilarityParams params_;
  Partition partition_;
};

struct ContractionReport {
  Exponent p;
  double r_p = 0.0;
  bool contractive = false;
};

/// r_p = sum a_k |d_k|^p (max |d_k| for p = inf); contractive iff r_p < 1.
ContractionReport contraction_factor(const SimilaritySystem& system, Exponent p);

/// (sum (|x_k| + |y_k|)^s a_k)^(1/s), or max (|x_k| + |y_k|) for s = inf.
double weighted_pair_norm(std::span<const double> x, std::span<const double> y, Exponent s,
                          std::span<const double> a);

}  // namespace ssf
