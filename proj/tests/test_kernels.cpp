#include <random>

#include <gtest/gtest.h>

#include "ssf/lp.hpp"
#include "ssf/measure.hpp"
#include "ssf/mesh.hpp"
#include "ssf/operator.hpp"
#include "ssf/presets.hpp"
#include "ssf/reference.hpp"
#include "support.hpp"

using namespace ssf;

namespace {

void expect_same(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
  ASSERT_EQ(f.pieces(), g.pieces());
  for (std::size_t j = 0; j <= f.pieces(); ++j) EXPECT_EQ(f.breakpoints()[j], g.breakpoints()[j]);
  for (std::size_t j = 0; j < f.pieces(); ++j) {
    EXPECT_EQ(f.start_values()[j], g.start_values()[j]);
    EXPECT_EQ(f.end_values()[j], g.end_values()[j]);
  }
}

}  // namespace

TEST(Kernels, ApplyGMatchesReference) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sys = check::random_system(rng, 5, 1.0);
    auto f = check::random_function(rng, 20);
    for (int m = 0; m < 3; ++m) {
      const auto par = apply_G(sys, f, {Execution::parallel, true});
      const auto ser = apply_G(sys, f, {Execution::serial, true});
      expect_same(par, ser);
      expect_same(par, reference::apply_G(sys, f));
      f = par;
    }
  }
}

TEST(Kernels, LpMatchesReference) {
  std::mt19937_64 rng(82);
  const auto sys = presets::cantor_family(0.3, 0.05);
  auto big = PiecewiseLinearFn::identity();
  for (int m = 0; m < 9; ++m) big = apply_G(sys, big);
  ASSERT_GT(big.pieces(), 3 * kReductionChunk);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = check::random_function(rng, 30);
    for (const auto p : {Exponent(1), Exponent(2.5), Exponent::infinity()}) {
      const double par = lp_distance(big, g, p, Execution::parallel);
      EXPECT_EQ(par, lp_distance(big, g, p, Execution::serial));
      EXPECT_NEAR(par, reference::lp_distance(big, g, p), 1e-12 * (1 + par));
    }
  }
}

TEST(Kernels, MeshMatchesReference) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sys = check::random_system(rng, 4, 0.8);
    const auto anchors = boundary_anchors(sys);
    const std::size_t depth = 2 + trial % 5;
    const auto par = evaluate_on_mesh(sys, anchors, depth, {}, Execution::parallel);
    const auto ser = evaluate_on_mesh(sys, anchors, depth, {}, Execution::serial);
    const auto ref = reference::evaluate_on_mesh(sys, anchors, depth);
    ASSERT_EQ(par.size(), ref.size());
    EXPECT_EQ(par.left, ref.left);
    EXPECT_EQ(par.right, ref.right);
    EXPECT_EQ(par.value_left, ref.value_left);
    EXPECT_EQ(par.value_right, ref.value_right);
    EXPECT_EQ(par.value_left, ser.value_left);
    EXPECT_EQ(build_mesh(sys, depth).points, reference::build_mesh(sys, depth).points);
    EXPECT_EQ(build_mesh(sys, depth, {}, Execution::serial).points, reference::build_mesh(sys, depth).points);
  }
}

TEST(Kernels, CodedIntervalsSerialParallel) {
  const auto mu = measure_from_function(presets::uniform({0.2, 0.3, 0.5}));
  const auto a = enumerate_coded_intervals(mu, 7, {}, Execution::parallel);
  const auto b = enumerate_coded_intervals(mu, 7, {}, Execution::serial);
  EXPECT_EQ(a.left, b.left);
  EXPECT_EQ(a.mass, b.mass);
}
