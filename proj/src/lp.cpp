#include "ssf/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace ssf {

namespace {

/// Difference f - g sampled on the merged breakpoints. Piece j runs over
/// [x[j], x[j+1]] with end values (h0[j], h1[j]).
struct DifferenceTable {
  std::vector<double> x;
  std::vector<double> h0;
  std::vector<double> h1;
};

double value_on_piece(std::span<const double> xs, std::span<const double> s, std::span<const double> e,
                      std::size_t j, double x) {
  const double x0 = xs[j];
  const double x1 = xs[j + 1];
  if (x <= x0) return s[j];
  if (x >= x1) return e[j];
  return s[j] + (e[j] - s[j]) * ((x - x0) / (x1 - x0));
}

DifferenceTable difference_table(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
  const auto fx = f.breakpoints();
  const auto gx = g.breakpoints();
  const auto fs = f.start_values();
  const auto fe = f.end_values();
  const auto gs = g.start_values();
  const auto ge = g.end_values();

  DifferenceTable table;
  table.x.reserve(fx.size() + gx.size());
  std::merge(fx.begin(), fx.end(), gx.begin(), gx.end(), std::back_inserter(table.x));
  table.x.erase(std::unique(table.x.begin(), table.x.end()), table.x.end());

  const std::size_t pieces = table.x.size() - 1;
  table.h0.resize(pieces);
  table.h1.resize(pieces);
  std::size_t jf = 0;
  std::size_t jg = 0;
  for (std::size_t j = 0; j < pieces; ++j) {
    const double x0 = table.x[j];
    const double x1 = table.x[j + 1];
    while (fx[jf + 1] <= x0) ++jf;
    while (gx[jg + 1] <= x0) ++jg;
    table.h0[j] = value_on_piece(fx, fs, fe, jf, x0) - value_on_piece(gx, gs, ge, jg, x0);
    table.h1[j] = value_on_piece(fx, fs, fe, jf, x1) - value_on_piece(gx, gs, ge, jg, x1);
  }
  return table;
}

}  // namespace

double affine_power_integral(double width, double h0, double h1, double p) noexcept {
  double lo = std::abs(h0);
  double hi = std::abs(h1);
  if ((h0 < 0.0 && h1 > 0.0) || (h0 > 0.0 && h1 < 0.0)) {
    // Sign change: two triangles meeting at the root.
    return width * (std::pow(lo, p + 1.0) + std::pow(hi, p + 1.0)) / ((p + 1.0) * (lo + hi));
  }
  if (lo > hi) std::swap(lo, hi);
  if (hi == 0.0) return 0.0;
  // (hi^{p+1} - lo^{p+1}) / ((p+1)(hi - lo)) = hi^p * g(u) / (p+1),
  // g(u) = (1 - (1-u)^{p+1}) / u with u = (hi - lo) / hi.
  const double u = (hi - lo) / hi;
  double g = p + 1.0;
  if (u > 0.0) g = -std::expm1((p + 1.0) * std::log1p(-u)) / u;
  return width * std::pow(hi, p) * g / (p + 1.0);
}

double lp_distance(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g, Exponent p, Execution execution) {
  const DifferenceTable table = difference_table(f, g);
  const std::size_t pieces = table.h0.size();
  const std::size_t chunks = (pieces + kReductionChunk - 1) / kReductionChunk;
  std::vector<double> partial(chunks, 0.0);
  const bool infinite = p.is_infinite();
  const double pv = infinite ? 0.0 : p.value();

  const auto chunks_i = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(static) if (execution == Execution::parallel && chunks > 1)
  for (std::int64_t ci = 0; ci < chunks_i; ++ci) {
    const auto chunk = static_cast<std::size_t>(ci);
    const std::size_t begin = chunk * kReductionChunk;
    const std::size_t end = std::min(pieces, begin + kReductionChunk);
    double acc = 0.0;
    for (std::size_t j = begin; j < end; ++j) {
      if (infinite) {
        acc = std::max({acc, std::abs(table.h0[j]), std::abs(table.h1[j])});
      } else {
        acc += affine_power_integral(table.x[j + 1] - table.x[j], table.h0[j], table.h1[j], pv);
      }
    }
    partial[chunk] = acc;
  }

  if (infinite) return *std::max_element(partial.begin(), partial.end());
  double total = 0.0;
  for (double v : partial) total += v;
  return std::pow(total, 1.0 / pv);
}

double lp_norm(const PiecewiseLinearFn& f, Exponent p, Execution execution) {
  static const PiecewiseLinearFn zero = PiecewiseLinearFn::constant(0.0);
  return lp_distance(f, zero, p, execution);
}

}  // namespace ssf
