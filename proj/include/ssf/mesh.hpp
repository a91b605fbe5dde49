#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ssf/execution.hpp"
#include "ssf/system.hpp"

namespace ssf {

/// Address (k_1, ..., k_m) of a segment of the refinement mesh T_m. Letters
/// are 1-based; k_1 picks the coarsest segment, so lexicographic order of
/// codes is left-to-right order on [0,1]. The segment is
/// S_{k_1} o ... o S_{k_m}([0,1]) with S_k(t) = a_k t + alpha_k.
class SegmentCode {
 public:
  SegmentCode() = default;
  SegmentCode(std::initializer_list<std::uint32_t> letters) : letters_(letters) {}
  explicit SegmentCode(std::vector<std::uint32_t> letters) : letters_(std::move(letters)) {}

  /// Parses "1,3,2" (commas or spaces). An empty string is the empty code.
  static SegmentCode parse(const std::string& text);

  /// The code at position `index` of the depth-m lexicographic enumeration.
  static SegmentCode from_index(std::uint64_t index, std::size_t n, std::size_t depth);

  [[nodiscard]] std::size_t depth() const noexcept { return letters_.size(); }
  [[nodiscard]] const std::vector<std::uint32_t>& letters() const noexcept { return letters_; }
  [[nodiscard]] std::string to_string() const;

  /// Throws BadIndex unless every letter is in 1..n.
  void check(std::size_t n) const;

  friend bool operator==(const SegmentCode&, const SegmentCode&) = default;

 private:
  std::vector<std::uint32_t> letters_;
};

struct Segment {
  double left = 0.0;
  double right = 1.0;
};

enum class End { left, right };

/// Sorted, deduplicated endpoints of the n^m segments of T_m.
struct Mesh {
  std::size_t depth = 0;
  std::vector<double> points;
};

struct MeshLimits {
  std::uint64_t max_segments = 10'000'000;
};

/// n^depth, throwing DepthTooLarge once it passes the cap.
std::uint64_t segment_count(std::size_t n, std::size_t depth, const MeshLimits& limits = {});

Mesh build_mesh(const SimilaritySystem& system, std::size_t depth, const MeshLimits& limits = {},
                Execution execution = Execution::parallel);

Segment code_to_segment(const SimilaritySystem& system, const SegmentCode& code);

/// One-sided boundary values of the fixed point, f(0+) and f(1-).
struct BoundaryAnchors {
  double f0 = 0.0;
  double f1 = 0.0;
};

/// f0 = beta_1 / (1 - d_1), f1 = (c_n + beta_n) / (1 - d_n). Throws Unbounded
/// if |d_1| >= 1 or |d_n| >= 1.
BoundaryAnchors boundary_anchors(const SimilaritySystem& system);

/// One-sided value of the fixed point at an end of the coded segment: the
/// right limit at the left end, the left limit at the right end. Computed by
/// f(S_k(t)) = c_k t + d_k f(t) + beta_k from the innermost letter outwards.
/// Throws Unbounded if some |d_k| >= 1.
double exact_value_at_code_point(const SimilaritySystem& system, const BoundaryAnchors& anchors,
                                 const SegmentCode& code, End end);

/// Closed form of f_m = G^m(x) on the coded segment for systems with c = 0:
///   f_m(x) = (prod d / prod a) (x - x_left) + sum_j beta_{k_j} prod_{i<j} d_{k_i}.
/// Throws NonzeroC if some c_k != 0.
double iterate_closed_form(const SimilaritySystem& system, const SegmentCode& code, double x);

/// Fixed-point values at both ends of every depth-m segment, in code order.
/// value_left[i] = f(left_i+), value_right[i] = f(right_i-).
struct MeshValues {
  std::size_t depth = 0;
  std::vector<double> left;
  std::vector<double> right;
  std::vector<double> value_left;
  std::vector<double> value_right;

  [[nodiscard]] std::size_t size() const noexcept { return left.size(); }
};

/// Level-by-level evaluation (each level is the image of the previous one under
/// the n maps). Bit-identical to calling exact_value_at_code_point per code.
MeshValues evaluate_on_mesh(const SimilaritySystem& system, const BoundaryAnchors& anchors, std::size_t depth,
                            const MeshLimits& limits = {}, Execution execution = Execution::parallel);

/// Approximate f(x+) by following the code of x for `depth` levels and
/// interpolating the anchors linearly on the final segment.
double value_by_descent(const SimilaritySystem& system, const BoundaryAnchors& anchors, double x,
                        std::size_t depth = 60);

}  // namespace ssf
