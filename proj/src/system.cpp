#include "ssf/system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ssf/error.hpp"

namespace ssf {

std::vector<double> Partition::lengths() const {
  std::vector<double> out;
  out.reserve(segments());
  for (std::size_t k = 0; k + 1 < alpha.size(); ++k) out.push_back(alpha[k + 1] - alpha[k]);
  return out;
}

Partition validate(const SimilarityParams& params) {
  const std::size_t n = params.a.size();
  if (params.c.size() != n || params.d.size() != n || params.beta.size() != n) {
    std::ostringstream os;
    os << "parameter sequences differ in length (a=" << n << ", c=" << params.c.size()
       << ", d=" << params.d.size() << ", beta=" << params.beta.size() << ")";
    throw Error(ErrorCode::LengthMismatch, os.str());
  }
  if (n <= 1) throw Error(ErrorCode::NDegenerate, "need n > 1 segments, got " + std::to_string(n));

  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ak = params.a[k];
    if (!(ak > 0.0) || !std::isfinite(ak)) {
      std::ostringstream os;
      os << "a_" << (k + 1) << " = " << ak << " is not a positive length";
      throw Error(ErrorCode::BadLengths, os.str());
    }
    sum += ak;
  }
  if (std::abs(sum - 1.0) > kPartitionSumTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "segment lengths sum to " << sum << ", expected 1";
    throw Error(ErrorCode::BadLengths, os.str());
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(params.c[k]) || !std::isfinite(params.d[k]) || !std::isfinite(params.beta[k])) {
      throw Error(ErrorCode::BadLengths, "non-finite parameter at k=" + std::to_string(k + 1));
    }
  }

  Partition partition;
  partition.alpha.resize(n + 1);
  partition.alpha[0] = 0.0;
  for (std::size_t k = 0; k < n; ++k) partition.alpha[k + 1] = partition.alpha[k] + params.a[k];
  partition.alpha[n] = 1.0;
  if (partition.alpha[n - 1] >= 1.0) {
    throw Error(ErrorCode::BadLengths, "last segment collapses after clamping alpha_{n+1} = 1");
  }
  return partition;
}

SimilaritySystem::SimilaritySystem(SimilarityParams params)
    : params_(std::move(params)), partition_(validate(params_)) {}

bool SimilaritySystem::has_zero_drift() const noexcept {
  return std::all_of(params_.c.begin(), params_.c.end(), [](double v) { return v == 0.0; });
}

double SimilaritySystem::max_abs_d() const noexcept {
  double m = 0.0;
  for (double v : params_.d) m = std::max(m, std::abs(v));
  return m;
}

ContractionReport contraction_factor(const SimilaritySystem& system, Exponent p) {
  ContractionReport report{p, 0.0, false};
  if (p.is_infinite()) {
    report.r_p = system.max_abs_d();
  } else {
    const double pv = p.value();
    double r = 0.0;
    for (std::size_t k = 0; k < system.n(); ++k) r += system.a()[k] * std::pow(std::abs(system.d()[k]), pv);
    report.r_p = r;
  }
  report.contractive = report.r_p < 1.0;
  return report;
}

double weighted_pair_norm(std::span<const double> x, std::span<const double> y, Exponent s,
                          std::span<const double> a) {
  if (x.size() != y.size() || x.size() != a.size()) {
    throw Error(ErrorCode::LengthMismatch, "weighted_pair_norm needs equally long x, y, a");
  }
  if (s.is_infinite()) {
    double m = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) m = std::max(m, std::abs(x[k]) + std::abs(y[k]));
    return m;
  }
  const double sv = s.value();
  double sum = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) sum += std::pow(std::abs(x[k]) + std::abs(y[k]), sv) * a[k];
  return std::pow(sum, 1.0 / sv);
}

}  // namespace ssf
