#pragma once
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "ssf/piecewise.hpp"
#include "ssf/system.hpp"

namespace ssf::check {

inline std::vector<double> random_lengths(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.2, 1.2);
  std::vector<double> a(n);
  double s = 0.0;
  for (auto& x : a) s += (x = u(rng));
  double head = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) head += (a[k] /= s);
  a[n - 1] = 1.0 - head;
  return a;
}

inline SimilarityParams random_params(std::mt19937_64& rng, std::size_t n, double d_max, double cb_max = 1.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SimilarityParams p;
  p.a = random_lengths(rng, n);
  for (std::size_t k = 0; k < n; ++k) {
    p.c.push_back(cb_max * u(rng));
    p.d.push_back(d_max * u(rng));
    p.beta.push_back(cb_max * u(rng));
  }
  return p;
}

inline SimilaritySystem random_system(std::mt19937_64& rng, std::size_t max_n, double d_max) {
  std::uniform_int_distribution<std::size_t> nd(2, max_n);
  return SimilaritySystem(random_params(rng, nd(rng), d_max));
}

/// Random function with jumps at interior breakpoints.
inline PiecewiseLinearFn random_function(std::mt19937_64& rng, std::size_t max_pieces = 8) {
  std::uniform_int_distribution<std::size_t> m(1, max_pieces);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t pieces = m(rng);
  std::vector<double> x{0.0, 1.0};
  while (x.size() < pieces + 1) x.push_back(u(rng));
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  std::vector<double> s(x.size() - 1), e(x.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    s[j] = 4.0 * u(rng) - 2.0;
    e[j] = 4.0 * u(rng) - 2.0;
  }
  return PiecewiseLinearFn(x, s, e);
}

/// Gauss-Legendre (8 nodes) on `sub` subintervals of every piece of the
/// common refinement. Never uses the closed-form antiderivative.
inline double quadrature_lp(const std::function<double(double)>& h, std::vector<double> cuts, double p,
                            int sub = 64) {
  static const double node[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363};
  static const double weight[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    const double w = (cuts[j + 1] - cuts[j]) / sub;
    if (w <= 0) continue;
    for (int s = 0; s < sub; ++s) {
      const double mid = cuts[j] + (s + 0.5) * w;
      for (int i = 0; i < 4; ++i) {
        total += 0.5 * w * weight[i] * std::pow(std::abs(h(mid + 0.5 * w * node[i])), p);
        total += 0.5 * w * weight[i] * std::pow(std::abs(h(mid - 0.5 * w * node[i])), p);
      }
    }
  }
  return std::pow(total, 1.0 / p);
}

inline std::vector<double> merged_breakpoints(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
  std::vector<double> cuts(f.breakpoints().begin(), f.breakpoints().end());
  cuts.insert(cuts.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

/// f_m(x) = G^m(identity)(x) evaluated pointwise straight from the definition,
/// locating the segment by scanning the partition.
inline double iterate_pointwise(const SimilaritySystem& sys, double x, int m) {
  if (m == 0) return x;
  const auto alpha = sys.alpha();
  std::size_t k = 0;
  while (k + 1 < sys.n() && x > alpha[k + 1]) ++k;
  double t = std::clamp((x - alpha[k]) / sys.a()[k], 0.0, 1.0);
  // keep mesh points on the mesh; otherwise rounding grows like a^-m
  if (t < 1e-11) t = 0.0;
  if (t > 1.0 - 1e-11) t = 1.0;
  return sys.beta()[k] + sys.c()[k] * t + sys.d()[k] * iterate_pointwise(sys, t, m - 1);
}

inline bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace ssf::check
