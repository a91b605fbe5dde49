#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ssf/error.hpp"
#include "ssf/measure.hpp"
#include "ssf/presets.hpp"
#include "support.hpp"

using namespace ssf;

namespace {

double ks_distance(std::vector<double> xs, const SimilaritySystem& sys) {
  std::sort(xs.begin(), xs.end());
  const auto anchors = boundary_anchors(sys);
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double F = value_by_descent(sys, anchors, xs[i]);
    d = std::max({d, std::abs((i + 1) / n - F), std::abs(F - i / n)});
  }
  return d;
}

}  // namespace

TEST(Measure, BernoulliBranches) {
  const auto mu = measure_from_function(presets::bernoulli(0.3));
  ASSERT_EQ(mu.size(), 2u);
  EXPECT_DOUBLE_EQ(mu.branches[0].weight, 0.3);
  EXPECT_DOUBLE_EQ(mu.branches[1].weight, 0.7);
  EXPECT_DOUBLE_EQ(mu.branches[1].left, 0.5);
  EXPECT_NEAR(coded_interval_mass(mu, {1, 2}), 0.21, 1e-16);
  EXPECT_EQ(coded_interval_mass(mu, {}), 1.0);
  const auto seg = coded_interval(mu, {2, 1});
  EXPECT_DOUBLE_EQ(seg.left, 0.5);
  EXPECT_DOUBLE_EQ(seg.right, 0.75);
  EXPECT_THROW(coded_interval_mass(mu, {3}), Error);
}

TEST(Measure, CantorNeedsCollapse) {
  const auto cantor = presets::cantor_family(1.0 / 3, 0.0);
  EXPECT_THROW(measure_from_function(cantor), Error);
  const auto mu = measure_from_function(cantor, {.collapse_zero_branches = true});
  ASSERT_EQ(mu.size(), 2u);
  EXPECT_EQ(mu.branches[0].source, 1u);
  EXPECT_EQ(mu.branches[1].source, 3u);
  EXPECT_NEAR(mu.branches[1].left, 2.0 / 3, 1e-15);
  EXPECT_LE(cdf_consistency(cantor, mu, 6), 1e-12);
}

TEST(Measure, RejectsUnsuitableSystems) {
  EXPECT_THROW(measure_from_function(presets::counterexample(0.5)), Error);
  EXPECT_THROW(measure_from_function(presets::characteristic(0.25, 0.75)), Error);
  EXPECT_THROW(measure_from_function(presets::cantor_family(1.0 / 3, 0.1)), Error);
}

TEST(MeasureProperty, MassesSumToOneAndMatchCdf) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = check::random_lengths(rng, 2 + trial % 3);
    std::vector<double> w = check::random_lengths(rng, a.size());
    // monotone, continuous, c = 0: d = w, beta_k = partial sums of w
    SimilarityParams p{a, std::vector<double>(a.size(), 0.0), w, {}};
    double acc = 0.0;
    for (double x : w) {
      p.beta.push_back(acc);
      acc += x;
    }
    const SimilaritySystem sys(p);
    const auto mu = measure_from_function(sys);
    const auto iv = enumerate_coded_intervals(mu, 5);
    double total = 0.0;
    for (double m : iv.mass) total += m;
    EXPECT_NEAR(total, 1.0, 1e-12);
    for (std::size_t i = 0; i + 1 < iv.size(); ++i) EXPECT_EQ(iv.right[i], iv.left[i + 1]);
    EXPECT_LE(cdf_consistency(sys, mu, 5), 1e-12);
  }
}

TEST(Sampling, DeterministicAcrossExecution) {
  const auto mu = measure_from_function(presets::bernoulli(1.0 / 3));
  const auto a = sample(mu, 10000, 20, 7, Execution::parallel);
  const auto b = sample(mu, 10000, 20, 7, Execution::serial);
  const auto c = sample(mu, 10000, 20, 8);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(sample(mu, 5000, 20, 7), std::vector<double>(a.begin(), a.begin() + 5000));
}

TEST(Sampling, SplitmixReference) {
  // first outputs of the published splitmix64 generator seeded with 0
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(SamplingProperty, KolmogorovSmirnov) {
  const auto bern = presets::bernoulli(1.0 / 3);
  EXPECT_LE(ks_distance(sample(measure_from_function(bern), 10000, 20, 1), bern), 0.02);
  const auto uni = presets::uniform({0.2, 0.5, 0.3});
  EXPECT_LE(ks_distance(sample(measure_from_function(uni), 10000, 20, 2), uni), 0.02);
  const auto cantor = presets::cantor_family(1.0 / 3, 0.0);
  EXPECT_LE(ks_distance(sample(measure_from_function(cantor, {.collapse_zero_branches = true}), 10000, 20, 3), cantor),
            0.03);
}
