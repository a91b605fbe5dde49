#include "ssf/reference.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ssf/lp.hpp"

namespace ssf::reference {

PiecewiseLinearFn apply_G(const SimilaritySystem& system, const PiecewiseLinearFn& f) {
  const auto fx = f.breakpoints();
  std::vector<double> xs{0.0};
  std::vector<double> ss;
  std::vector<double> es;
  for (std::size_t k = 0; k < system.n(); ++k) {
    for (std::size_t j = 0; j + 1 < fx.size(); ++j) {
      const double t0 = fx[j];
      const double t1 = fx[j + 1];
      ss.push_back(system.beta()[k] + system.c()[k] * t0 + system.d()[k] * f.right_limit(j));
      es.push_back(system.beta()[k] + system.c()[k] * t1 + system.d()[k] * f.left_limit(j + 1));
      xs.push_back(system.map_point(k, t1));
    }
  }
  return make_unchecked(std::move(xs), std::move(ss), std::move(es)).simplified();
}

double lp_distance(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g, Exponent p) {
  std::set<double> points(f.breakpoints().begin(), f.breakpoints().end());
  points.insert(g.breakpoints().begin(), g.breakpoints().end());
  const std::vector<double> x(points.begin(), points.end());
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < x.size(); ++j) {
    const double h0 = f.right_value(x[j]) - g.right_value(x[j]);
    const double h1 = f.left_value(x[j + 1]) - g.left_value(x[j + 1]);
    if (p.is_infinite()) {
      acc = std::max({acc, std::abs(h0), std::abs(h1)});
    } else {
      acc += affine_power_integral(x[j + 1] - x[j], h0, h1, p.value());
    }
  }
  return p.is_infinite() ? acc : std::pow(acc, 1.0 / p.value());
}

MeshValues evaluate_on_mesh(const SimilaritySystem& system, const BoundaryAnchors& anchors, std::size_t depth) {
  const std::uint64_t count = segment_count(system.n(), depth);
  MeshValues out;
  out.depth = depth;
  for (std::uint64_t i = 0; i < count; ++i) {
    const SegmentCode code = SegmentCode::from_index(i, system.n(), depth);
    const Segment seg = code_to_segment(system, code);
    out.left.push_back(seg.left);
    out.right.push_back(seg.right);
    out.value_left.push_back(exact_value_at_code_point(system, anchors, code, End::left));
    out.value_right.push_back(exact_value_at_code_point(system, anchors, code, End::right));
  }
  return out;
}

Mesh build_mesh(const SimilaritySystem& system, std::size_t depth) {
  const std::uint64_t count = segment_count(system.n(), depth);
  std::set<double> points;
  for (std::uint64_t i = 0; i < count; ++i) {
    const Segment seg = code_to_segment(system, SegmentCode::from_index(i, system.n(), depth));
    points.insert(seg.left);
    points.insert(seg.right);
  }
  return {depth, std::vector<double>(points.begin(), points.end())};
}

}  // namespace ssf::reference
