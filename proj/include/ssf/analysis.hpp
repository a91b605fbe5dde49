#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssf/exponent.hpp"
#include "ssf/mesh.hpp"
#include "ssf/system.hpp"

namespace ssf {

/// Intermediate quantities of a norm bound. Index s-1 holds the value for s.
struct NormBoundComponents {
  std::vector<double> pair_norms;  // ||{c,beta}||_{s,a}, s = 1..[p] (or the inf norm)
  std::vector<double> factors;     // r_s, s = 1..[p] (or r_inf)
  std::optional<double> r_p;       // fractional p only
  std::optional<double> constant_c;
  double numerator = 0.0;
  double denominator = 1.0;
};

struct NormBound {
  Exponent p{1.0};
  double bound = 0.0;
  NormBoundComponents components;
};

/// ||f||_p <= sum_{s<=p} ||{c,beta}||_{s,a} / (prod_{s<=p} (1 - r_s))^{1/p}.
NormBound norm_bound_integer(const SimilaritySystem& system, int p);

/// Bound for non-integer p > 1 with the constant
/// C = max{max_k (|c_k|+|beta_k|)^{p'}, max_k |d_k|^{p'}, (sum_s ||{c,beta}||_{s,a})^{p'}}^{1/p},
/// p' the fractional part. Throws BadExponent for integer p.
NormBound norm_bound_fractional(const SimilaritySystem& system, double p);

/// ||f||_inf <= max_k (|c_k| + |beta_k|) / (1 - max_k |d_k|).
NormBound norm_bound_infinity(const SimilaritySystem& system);

/// Dispatches on the kind of exponent.
NormBound norm_bound(const SimilaritySystem& system, Exponent p);

enum class RegularityKind { continuity, monotonicity, bounded_variation };
enum class Verdict { holds, fails, indeterminate };

std::string_view to_string(RegularityKind kind) noexcept;
std::string_view to_string(Verdict verdict) noexcept;

/// A checked condition that failed (or, for numeric scans, a located violation).
struct Witness {
  std::string condition;
  std::size_t index = 0;            // 1-based k the condition refers to; 0 if none
  std::optional<double> location;   // point of [0,1] where it shows up
  double residual = 0.0;
  std::string detail;
};

struct RegularityVerdict {
  RegularityKind kind = RegularityKind::continuity;
  Verdict verdict = Verdict::indeterminate;
  std::vector<Witness> witnesses;
};

inline constexpr double kDefaultConditionTolerance = 1e-9;

/// Continuity of the fixed point: max |d_k| < 1, the junction equalities
/// c_k + d_k f(1) + beta_k = d_{k+1} f(0) + beta_{k+1}, and the closure
/// sum c + (f(1)-f(0)) sum d = f(1) - f(0).
RegularityVerdict continuity_check(const SimilaritySystem& system, double tol = kDefaultConditionTolerance);

struct MonotonicityOptions {
  double tol = kDefaultConditionTolerance;
  std::size_t fallback_depth = 8;
  MeshLimits limits{};
};

/// Necessary conditions (fail fast), sufficient conditions (holds), otherwise a
/// scan of exact mesh values for a decrease. Throws Unbounded.
RegularityVerdict monotonicity_classify(const SimilaritySystem& system, const MonotonicityOptions& options = {});

struct VariationCriterion {
  double D = 0.0;
  RegularityVerdict verdict;
};

/// D = sum |d_k|; bounded variation iff D <= 1 for continuous, c = 0 systems
/// normalized to f(0) = 0, f(1) = 1. Throws PreconditionViolated naming the
/// failed precondition.
VariationCriterion variation_criterion(const SimilaritySystem& system, double tol = kDefaultConditionTolerance);

/// Variation of the exact fixed-point values over T_m, counting jumps at mesh
/// points through the one-sided values.
double variation_on_mesh(const SimilaritySystem& system, std::size_t depth, const MeshLimits& limits = {});

/// Upper bound on ||f - g||_p for the fixed points of two systems on the same
/// partition, given (upper bounds on) their norms.
double stability_bound(const SimilaritySystem& first, const SimilaritySystem& second, Exponent p,
                       double norm_first, double norm_second);

/// Uniform norm bound over all systems with ||{c,beta}||_{p,a} <= R and
/// r_p <= 1 - eps (inf-norm analogues for p = inf).
double family_bound(double R, double eps, Exponent p);

}  // namespace ssf
