#include "ssf/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ssf/error.hpp"

namespace ssf {

namespace {

void require_bounded(const SimilaritySystem& system) {
  for (std::size_t k = 0; k < system.n(); ++k) {
    if (!(std::abs(system.d()[k]) < 1.0)) {
      std::ostringstream os;
      os << "|d_" << (k + 1) << "| = " << std::abs(system.d()[k]) << " >= 1; the fixed point is not bounded";
      throw Error(ErrorCode::Unbounded, os.str());
    }
  }
}

}  // namespace

SegmentCode SegmentCode::parse(const std::string& text) {
  std::vector<std::uint32_t> letters;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad code letter '" + token + "'");
    }
    if (used != token.size() || value < 1) throw Error(ErrorCode::BadIndex, "bad code letter '" + token + "'");
    letters.push_back(static_cast<std::uint32_t>(value));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '(' || ch == ')') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return SegmentCode(std::move(letters));
}

SegmentCode SegmentCode::from_index(std::uint64_t index, std::size_t n, std::size_t depth) {
  std::vector<std::uint32_t> letters(depth);
  for (std::size_t i = depth; i-- > 0;) {
    letters[i] = static_cast<std::uint32_t>(index % n) + 1;
    index /= n;
  }
  return SegmentCode(std::move(letters));
}

std::string SegmentCode::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

void SegmentCode::check(std::size_t n) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] < 1 || letters_[i] > n) {
      std::ostringstream os;
      os << "letter " << letters_[i] << " at position " << (i + 1) << " is outside 1.." << n;
      throw Error(ErrorCode::BadIndex, os.str());
    }
  }
}

std::uint64_t segment_count(std::size_t n, std::size_t depth, const MeshLimits& limits) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    if (count > limits.max_segments / n) {
      std::ostringstream os;
      os << n << "^" << depth << " segments exceed the cap of " << limits.max_segments;
      throw Error(ErrorCode::DepthTooLarge, os.str());
    }
    count *= n;
  }
  if (count > limits.max_segments) {
    throw Error(ErrorCode::DepthTooLarge, "segment count exceeds the cap");
  }
  return count;
}

Segment code_to_segment(const SimilaritySystem& system, const SegmentCode& code) {
  code.check(system.n());
  const auto& letters = code.letters();
  double left = 0.0;
  double right = 1.0;
  for (std::size_t i = letters.size(); i-- > 0;) {
    const std::size_t k = letters[i] - 1;
    left = system.map_point(k, left);
    right = system.map_point(k, right);
  }
  return {left, right};
}

Mesh build_mesh(const SimilaritySystem& system, std::size_t depth, const MeshLimits& limits,
                Execution execution) {
  if (depth < 1) throw Error(ErrorCode::DepthTooLarge, "mesh depth must be >= 1");
  const std::size_t n = system.n();
  const std::uint64_t count = segment_count(n, depth, limits);

  // Left endpoints of the codes, built level by level (outer letter prepended).
  std::vector<double> level{0.0};
  std::vector<double> next;
  for (std::size_t m = 1; m <= depth; ++m) {
    const std::size_t prev = level.size();
    next.assign(prev * n, 0.0);
    const auto total = static_cast<std::int64_t>(prev * n);
#pragma omp parallel for schedule(static) if (execution == Execution::parallel && total > 4096)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const auto out = static_cast<std::size_t>(idx);
      next[out] = system.map_point(out / prev, level[out % prev]);
    }
    level.swap(next);
  }
  (void)count;

  Mesh mesh;
  mesh.depth = depth;
  mesh.points = std::move(level);
  mesh.points.push_back(1.0);
  std::sort(mesh.points.begin(), mesh.points.end());
  mesh.points.erase(std::unique(mesh.points.begin(), mesh.points.end()), mesh.points.end());
  return mesh;
}

BoundaryAnchors boundary_anchors(const SimilaritySystem& system) {
  const std::size_t n = system.n();
  const double d1 = system.d()[0];
  const double dn = system.d()[n - 1];
  if (!(std::abs(d1) < 1.0) || !(std::abs(dn) < 1.0)) {
    throw Error(ErrorCode::Unbounded, "boundary anchors need |d_1| < 1 and |d_n| < 1");
  }
  return {system.beta()[0] / (1.0 - d1), (system.c()[n - 1] + system.beta()[n - 1]) / (1.0 - dn)};
}

double exact_value_at_code_point(const SimilaritySystem& system, const BoundaryAnchors& anchors,
                                 const SegmentCode& code, End end) {
  require_bounded(system);
  code.check(system.n());
  const auto& letters = code.letters();
  double t = end == End::left ? 0.0 : 1.0;
  double value = end == End::left ? anchors.f0 : anchors.f1;
  for (std::size_t i = letters.size(); i-- > 0;) {
    const std::size_t k = letters[i] - 1;
    value = system.c()[k] * t + system.d()[k] * value + system.beta()[k];
    t = system.map_point(k, t);
  }
  return value;
}

double iterate_closed_form(const SimilaritySystem& system, const SegmentCode& code, double x) {
  if (!system.has_zero_drift()) {
    throw Error(ErrorCode::NonzeroC, "closed-form iterates need c_k = 0 for all k");
  }
  code.check(system.n());
  const auto& letters = code.letters();
  double d_prod = 1.0;
  double a_prod = 1.0;
  double offset = 0.0;
  for (std::uint32_t letter : letters) {
    const std::size_t k = letter - 1;
    offset += system.beta()[k] * d_prod;
    d_prod *= system.d()[k];
    a_prod *= system.a()[k];
  }
  const Segment segment = code_to_segment(system, code);
  return d_prod / a_prod * (x - segment.left) + offset;
}

MeshValues evaluate_on_mesh(const SimilaritySystem& system, const BoundaryAnchors& anchors, std::size_t depth,
                            const MeshLimits& limits, Execution execution) {
  require_bounded(system);
  const std::size_t n = system.n();
  segment_count(n, depth, limits);

  MeshValues cur;
  cur.left = {0.0};
  cur.right = {1.0};
  cur.value_left = {anchors.f0};
  cur.value_right = {anchors.f1};
  MeshValues nxt;
  const auto c = system.c();
  const auto d = system.d();
  const auto beta = system.beta();

  for (std::size_t m = 1; m <= depth; ++m) {
    const std::size_t prev = cur.size();
    const std::size_t total = prev * n;
    nxt.left.resize(total);
    nxt.right.resize(total);
    nxt.value_left.resize(total);
    nxt.value_right.resize(total);
    const auto total_i = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(static) if (execution == Execution::parallel && total > 4096)
    for (std::int64_t idx = 0; idx < total_i; ++idx) {
      const auto out = static_cast<std::size_t>(idx);
      const std::size_t k = out / prev;
      const std::size_t i = out % prev;
      const double tl = cur.left[i];
      const double tr = cur.right[i];
      nxt.value_left[out] = c[k] * tl + d[k] * cur.value_left[i] + beta[k];
      nxt.value_right[out] = c[k] * tr + d[k] * cur.value_right[i] + beta[k];
      nxt.left[out] = system.map_point(k, tl);
      nxt.right[out] = system.map_point(k, tr);
    }
    std::swap(cur, nxt);
  }
  cur.depth = depth;
  return cur;
}

double value_by_descent(const SimilaritySystem& system, const BoundaryAnchors& anchors, double x,
                        std::size_t depth) {
  require_bounded(system);
  const auto alpha = system.alpha();
  if (x >= 1.0) return anchors.f1;
  double t = std::max(x, 0.0);
  // f(x) = offset + scale * f(t) after each descent step.
  double offset = 0.0;
  double scale = 1.0;
  for (std::size_t level = 0; level < depth; ++level) {
    const auto it = std::upper_bound(alpha.begin(), alpha.end() - 1, t);
    const std::size_t k = static_cast<std::size_t>(it - alpha.begin()) - 1;
    const double inner = std::clamp((t - alpha[k]) / system.a()[k], 0.0, 1.0);
    offset += scale * (system.c()[k] * inner + system.beta()[k]);
    scale *= system.d()[k];
    t = inner;
    if (scale == 0.0) return offset;
  }
  return offset + scale * (anchors.f0 + (anchors.f1 - anchors.f0) * t);
}

}  // namespace ssf
