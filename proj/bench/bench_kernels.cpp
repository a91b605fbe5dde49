#include <benchmark/benchmark.h>

#include "ssf/lp.hpp"
#include "ssf/measure.hpp"
#include "ssf/mesh.hpp"
#include "ssf/operator.hpp"
#include "ssf/presets.hpp"
#include "ssf/reference.hpp"

using namespace ssf;

namespace {

// cantor_family with delta > 0 never merges pieces, so the image has n * pieces
const SimilaritySystem& system_under_test() {
  static const SimilaritySystem sys = presets::cantor_family(0.3, 0.05);
  return sys;
}

PiecewiseLinearFn iterate(std::size_t m) {
  auto f = PiecewiseLinearFn::identity();
  for (std::size_t i = 0; i < m; ++i) f = apply_G(system_under_test(), f);
  return f;
}

Execution mode(const benchmark::State& state) { return state.range(1) ? Execution::parallel : Execution::serial; }

void BM_ApplyG(benchmark::State& state) {
  const auto f = iterate(state.range(0));
  const OperatorOptions opts{mode(state), true};
  for (auto _ : state) benchmark::DoNotOptimize(apply_G(system_under_test(), f, opts));
  state.counters["pieces"] = static_cast<double>(f.pieces());
}

void BM_ApplyGReference(benchmark::State& state) {
  const auto f = iterate(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::apply_G(system_under_test(), f));
}

void BM_LpDistance(benchmark::State& state) {
  const auto f = iterate(state.range(0));
  const auto g = apply_G(system_under_test(), f);
  for (auto _ : state) benchmark::DoNotOptimize(lp_distance(f, g, Exponent(1.5), mode(state)));
}

void BM_LpDistanceReference(benchmark::State& state) {
  const auto f = iterate(state.range(0));
  const auto g = apply_G(system_under_test(), f);
  for (auto _ : state) benchmark::DoNotOptimize(reference::lp_distance(f, g, Exponent(1.5)));
}

void BM_EvaluateOnMesh(benchmark::State& state) {
  const auto& sys = system_under_test();
  const auto anchors = boundary_anchors(sys);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_on_mesh(sys, anchors, state.range(0), {}, mode(state)));
}

void BM_EvaluateOnMeshReference(benchmark::State& state) {
  const auto& sys = system_under_test();
  const auto anchors = boundary_anchors(sys);
  for (auto _ : state) benchmark::DoNotOptimize(reference::evaluate_on_mesh(sys, anchors, state.range(0)));
}

void BM_Sample(benchmark::State& state) {
  const auto mu = measure_from_function(presets::bernoulli(1.0 / 3));
  for (auto _ : state) benchmark::DoNotOptimize(sample(mu, state.range(0), 30, 1, mode(state)));
}

}  // namespace

BENCHMARK(BM_ApplyG)->ArgsProduct({{8, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApplyGReference)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LpDistance)->ArgsProduct({{8, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LpDistanceReference)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateOnMesh)->ArgsProduct({{8, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateOnMeshReference)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sample)->ArgsProduct({{100'000}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
