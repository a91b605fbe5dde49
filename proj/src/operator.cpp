#include "ssf/operator.hpp"

#include <cstdint>

namespace ssf {

PiecewiseLinearFn apply_G(const SimilaritySystem& system, const PiecewiseLinearFn& f,
                          const OperatorOptions& options) {
  const std::size_t n = system.n();
  const std::size_t pieces = f.pieces();
  const std::size_t total = n * pieces;

  const auto fx = f.breakpoints();
  const auto fs = f.start_values();
  const auto fe = f.end_values();
  const auto c = system.c();
  const auto d = system.d();
  const auto beta = system.beta();

  std::vector<double> xs(total + 1);
  std::vector<double> ss(total);
  std::vector<double> es(total);

  const auto total_i = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(static) if (options.execution == Execution::parallel && total > 4096)
  for (std::int64_t idx = 0; idx < total_i; ++idx) {
    const auto out = static_cast<std::size_t>(idx);
    const std::size_t k = out / pieces;
    const std::size_t j = out % pieces;
    const double t0 = fx[j];
    const double t1 = fx[j + 1];
    xs[out] = system.map_point(k, t0);
    ss[out] = beta[k] + c[k] * t0 + d[k] * fs[j];
    es[out] = beta[k] + c[k] * t1 + d[k] * fe[j];
  }
  xs[total] = 1.0;

  auto image = make_unchecked(std::move(xs), std::move(ss), std::move(es));
  if (options.simplify) return image.simplified();
  return image;
}

}  // namespace ssf
