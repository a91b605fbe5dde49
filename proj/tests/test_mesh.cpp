#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ssf/error.hpp"
#include "ssf/mesh.hpp"
#include "ssf/presets.hpp"
#include "support.hpp"

using namespace ssf;

TEST(SegmentCode, ParseAndEnumerate) {
  EXPECT_EQ(SegmentCode::parse("1,3"), (SegmentCode{1, 3}));
  EXPECT_EQ(SegmentCode::parse("2 1 3"), (SegmentCode{2, 1, 3}));
  EXPECT_EQ(SegmentCode::parse("").depth(), 0u);
  EXPECT_EQ(SegmentCode::from_index(5, 3, 2), (SegmentCode{2, 3}));
  EXPECT_EQ(SegmentCode::from_index(0, 3, 2), (SegmentCode{1, 1}));
  EXPECT_EQ((SegmentCode{1, 3}).to_string(), "1,3");
  EXPECT_THROW((SegmentCode{1, 4}).check(3), Error);
  EXPECT_THROW((SegmentCode{0}).check(3), Error);
}

TEST(Mesh, SegmentCountCap) {
  EXPECT_EQ(segment_count(3, 4), 81u);
  MeshLimits tight{100};
  EXPECT_THROW(segment_count(3, 5, tight), Error);
  EXPECT_THROW(segment_count(2, 80), Error);
}

TEST(Mesh, TernaryDepthTwo) {
  const auto mesh = build_mesh(presets::cantor_family(1.0 / 3, 0.0), 2);
  ASSERT_EQ(mesh.points.size(), 10u);
  for (int j = 0; j <= 9; ++j) EXPECT_NEAR(mesh.points[j], j / 9.0, 1e-15);
  EXPECT_EQ(mesh.points.front(), 0.0);
  EXPECT_EQ(mesh.points.back(), 1.0);
}

TEST(Mesh, DyadicDepthThree) {
  const auto mesh = build_mesh(presets::identity2(), 3);
  ASSERT_EQ(mesh.points.size(), 9u);
  for (int j = 0; j <= 8; ++j) EXPECT_EQ(mesh.points[j], j / 8.0);
}

TEST(Mesh, CodeToSegment) {
  const auto sys = presets::cantor_family(1.0 / 3, 0.0);
  const auto seg = code_to_segment(sys, {1, 3});
  EXPECT_NEAR(seg.left, 2.0 / 9, 1e-15);
  EXPECT_NEAR(seg.right, 3.0 / 9, 1e-15);
  const auto whole = code_to_segment(sys, {});
  EXPECT_EQ(whole.left, 0.0);
  EXPECT_EQ(whole.right, 1.0);
}

TEST(MeshProperty, CodesTileTheIntervalInOrder) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto sys = check::random_system(rng, 4, 0.5);
    const std::size_t depth = 1 + trial % 4;
    const auto count = segment_count(sys.n(), depth);
    double prev_right = 0.0;
    double total = 0.0;
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto seg = code_to_segment(sys, SegmentCode::from_index(i, sys.n(), depth));
      EXPECT_EQ(seg.left, prev_right);
      EXPECT_GT(seg.right, seg.left);
      total += seg.right - seg.left;
      prev_right = seg.right;
    }
    EXPECT_EQ(prev_right, 1.0);
    EXPECT_NEAR(total, 1.0, 1e-13);
    EXPECT_EQ(build_mesh(sys, depth).points.size(), count + 1);
  }
}

TEST(ExactValues, CantorFunction) {
  const auto sys = presets::cantor_family(1.0 / 3, 0.0);
  const auto anchors = boundary_anchors(sys);
  EXPECT_EQ(anchors.f0, 0.0);
  EXPECT_EQ(anchors.f1, 1.0);
  EXPECT_NEAR(exact_value_at_code_point(sys, anchors, {2, 1}, End::left), 0.5, 1e-15);
  EXPECT_NEAR(exact_value_at_code_point(sys, anchors, {1}, End::right), 0.5, 1e-15);
  EXPECT_NEAR(exact_value_at_code_point(sys, anchors, {3}, End::left), 0.5, 1e-15);
  EXPECT_NEAR(exact_value_at_code_point(sys, anchors, {1, 2}, End::left), 0.25, 1e-15);
  EXPECT_NEAR(exact_value_at_code_point(sys, anchors, {3, 2}, End::right), 0.75, 1e-15);
}

TEST(ExactValues, CounterexampleDips) {
  const auto sys = presets::counterexample(0.5);
  const auto anchors = boundary_anchors(sys);
  EXPECT_NEAR(exact_value_at_code_point(sys, anchors, {1}, End::right), 0.5, 1e-15);
  EXPECT_NEAR(exact_value_at_code_point(sys, anchors, {2, 2}, End::left), 5.0 / 12, 1e-15);
}

TEST(ExactValues, UnboundedRejected) {
  const auto sys = SimilaritySystem({{0.5, 0.5}, {0, 0}, {1.0, 0.5}, {0, 0}});
  EXPECT_THROW(boundary_anchors(sys), Error);
  const auto mid = SimilaritySystem({{0.3, 0.4, 0.3}, {0, 0, 0}, {0.5, 1.5, 0.5}, {0, 0, 0}});
  EXPECT_THROW(exact_value_at_code_point(mid, boundary_anchors(mid), {1}, End::left), Error);
}

TEST(ExactValues, ClosedFormExamples) {
  const auto sys = presets::cantor_family(1.0 / 3, 0.0);
  // f_2 on (2/9, 1/3): slope (1/4)/(1/9), value 1/4 at 2/9
  EXPECT_NEAR(iterate_closed_form(sys, {1, 3}, 2.0 / 9), 0.25, 1e-15);
  EXPECT_NEAR(iterate_closed_form(sys, {1, 3}, 5.0 / 18), 0.25 + 2.25 / 18, 1e-15);
  EXPECT_THROW(iterate_closed_form(presets::counterexample(0.5), {1}, 0.1), Error);
}

TEST(ExactValuesProperty, MatchPointwiseIterationOnContinuousSystems) {
  for (double a : {0.2, 1.0 / 3, 0.45}) {
    for (double delta : {0.0, 0.05, 0.1}) {
      const auto sys = presets::cantor_family(a, delta);
      const auto values = evaluate_on_mesh(sys, boundary_anchors(sys), 4);
      for (std::size_t i = 0; i < values.size(); ++i) {
        EXPECT_NEAR(values.value_left[i], check::iterate_pointwise(sys, values.left[i], 90), 1e-12);
        EXPECT_NEAR(values.value_right[i], check::iterate_pointwise(sys, values.right[i], 90), 1e-12);
      }
    }
  }
}

TEST(ExactValuesProperty, SelfSimilarityRelation) {
  // f(S_k(x)) = c_k x + d_k f(x) + beta_k between consecutive depths
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const auto sys = check::random_system(rng, 4, 0.8);
    const auto anchors = boundary_anchors(sys);
    const std::size_t depth = 1 + trial % 4;
    const auto inner = evaluate_on_mesh(sys, anchors, depth - 1);
    const auto outer = evaluate_on_mesh(sys, anchors, depth);
    ASSERT_EQ(outer.size(), sys.n() * inner.size());
    for (std::size_t k = 0; k < sys.n(); ++k) {
      for (std::size_t i = 0; i < inner.size(); ++i) {
        const std::size_t o = k * inner.size() + i;
        const double lhs = sys.c()[k] * inner.left[i] + sys.d()[k] * inner.value_left[i] + sys.beta()[k];
        EXPECT_NEAR(outer.value_left[o], lhs, 1e-12);
        EXPECT_NEAR(outer.left[o], sys.map_point(k, inner.left[i]), 1e-15);
      }
    }
  }
}

TEST(ExactValuesProperty, DescentMatchesPointwiseIteration) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const auto sys = check::random_system(rng, 4, 0.6);
    const auto anchors = boundary_anchors(sys);
    for (int i = 0; i < 40; ++i) {
      const double x = u(rng);
      EXPECT_NEAR(value_by_descent(sys, anchors, x), check::iterate_pointwise(sys, x, 80), 1e-9);
    }
  }
}
