#include "ssf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ssf/error.hpp"

namespace ssf {

namespace {

double pair_norm(const SimilaritySystem& system, Exponent s) {
  return weighted_pair_norm(system.c(), system.beta(), s, system.a());
}

void require_factors_below_one(const NormBoundComponents& components, std::optional<double> r_p, double p) {
  std::vector<std::string> offending;
  for (std::size_t s = 0; s < components.factors.size(); ++s) {
    if (!(components.factors[s] < 1.0)) offending.push_back(std::to_string(s + 1));
  }
  if (r_p && !(*r_p < 1.0)) {
    std::ostringstream os;
    os << p;
    offending.push_back(os.str());
  }
  if (!offending.empty()) {
    std::string list;
    for (const auto& s : offending) list += (list.empty() ? "" : ", ") + s;
    throw Error(ErrorCode::NotContractiveAtSomeS, "r_s >= 1 for s in {" + list + "}");
  }
}

/// Pair norms and factors for s = 1..count.
NormBoundComponents integer_components(const SimilaritySystem& system, int count) {
  NormBoundComponents components;
  for (int s = 1; s <= count; ++s) {
    const Exponent e(static_cast<double>(s));
    components.pair_norms.push_back(pair_norm(system, e));
    components.factors.push_back(contraction_factor(system, e).r_p);
  }
  return components;
}

}  // namespace

std::string_view to_string(RegularityKind kind) noexcept {
  switch (kind) {
    case RegularityKind::continuity: return "continuity";
    case RegularityKind::monotonicity: return "monotonicity";
    case RegularityKind::bounded_variation: return "bounded_variation";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "unknown";
}

NormBound norm_bound_integer(const SimilaritySystem& system, int p) {
  if (p < 1) throw Error(ErrorCode::BadExponent, "integer exponent must be >= 1");
  NormBound result;
  result.p = Exponent(static_cast<double>(p));
  result.components = integer_components(system, p);
  require_factors_below_one(result.components, std::nullopt, p);

  double numerator = 0.0;
  double product = 1.0;
  for (int s = 0; s < p; ++s) {
    numerator += result.components.pair_norms[s];
    product *= 1.0 - result.components.factors[s];
  }
  result.components.numerator = numerator;
  result.components.denominator = std::pow(product, 1.0 / p);
  result.bound = numerator / result.components.denominator;
  return result;
}

NormBound norm_bound_fractional(const SimilaritySystem& system, double p) {
  if (!(p > 1.0) || std::floor(p) == p || !std::isfinite(p)) {
    std::ostringstream os;
    os << "fractional bound needs a non-integer p > 1, got " << p;
    throw Error(ErrorCode::BadExponent, os.str());
  }
  const int whole = static_cast<int>(std::floor(p));
  const double frac = p - whole;

  NormBound result;
  result.p = Exponent(p);
  result.components = integer_components(system, whole);
  const double r_p = contraction_factor(system, Exponent(p)).r_p;
  result.components.r_p = r_p;
  require_factors_below_one(result.components, r_p, p);

  double sum_norms = 0.0;
  double product = 1.0;
  for (int s = 0; s < whole; ++s) {
    sum_norms += result.components.pair_norms[s];
    product *= 1.0 - result.components.factors[s];
  }
  const double top_norm = result.components.pair_norms[whole - 1];

  double max_cb = 0.0;
  for (std::size_t k = 0; k < system.n(); ++k) {
    max_cb = std::max(max_cb, std::abs(system.c()[k]) + std::abs(system.beta()[k]));
  }
  const double max_d = system.max_abs_d();
  const double inner = std::max({std::pow(max_cb, frac), std::pow(max_d, frac), std::pow(sum_norms, frac)});
  const double constant = std::pow(inner, 1.0 / p);
  result.components.constant_c = constant;

  result.components.numerator = constant * std::pow(std::pow(top_norm, whole) + sum_norms, whole / p);
  result.components.denominator = std::pow((1.0 - r_p) * product, 1.0 / p);
  result.bound = result.components.numerator / result.components.denominator;
  return result;
}

NormBound norm_bound_infinity(const SimilaritySystem& system) {
  NormBound result;
  result.p = Exponent::infinity();
  const double r_inf = system.max_abs_d();
  if (!(r_inf < 1.0)) {
    std::ostringstream os;
    os << "r_inf = " << r_inf << " >= 1";
    throw Error(ErrorCode::NotContractive, os.str());
  }
  const double top = pair_norm(system, Exponent::infinity());
  result.components.pair_norms = {top};
  result.components.factors = {r_inf};
  result.components.numerator = top;
  result.components.denominator = 1.0 - r_inf;
  result.bound = top / (1.0 - r_inf);
  return result;
}

NormBound norm_bound(const SimilaritySystem& system, Exponent p) {
  if (p.is_infinite()) return norm_bound_infinity(system);
  if (p.is_integer()) return norm_bound_integer(system, static_cast<int>(p.value()));
  return norm_bound_fractional(system, p.value());
}

RegularityVerdict continuity_check(const SimilaritySystem& system, double tol) {
  RegularityVerdict verdict;
  verdict.kind = RegularityKind::continuity;
  const std::size_t n = system.n();
  const auto c = system.c();
  const auto d = system.d();
  const auto beta = system.beta();
  const auto alpha = system.alpha();

  for (std::size_t k = 0; k < n; ++k) {
    if (!(std::abs(d[k]) < 1.0)) {
      verdict.witnesses.push_back({"max_abs_d_below_one", k + 1, std::nullopt, std::abs(d[k]) - 1.0,
                                   "|d_k| >= 1"});
    }
  }
  if (!(std::abs(d[0]) < 1.0) || !(std::abs(d[n - 1]) < 1.0)) {
    // Boundary values are undefined; the junction conditions cannot be formed.
    verdict.verdict = Verdict::fails;
    return verdict;
  }

  const BoundaryAnchors anchors = boundary_anchors(system);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double from_left = c[k] + d[k] * anchors.f1 + beta[k];
    const double from_right = d[k + 1] * anchors.f0 + beta[k + 1];
    const double jump = from_right - from_left;
    if (std::abs(jump) > tol) {
      std::ostringstream os;
      os.precision(17);
      os << "f(x-) = " << from_left << ", f(x+) = " << from_right;
      verdict.witnesses.push_back({"junction", k + 1, alpha[k + 1], jump, os.str()});
    }
  }

  double sum_c = 0.0;
  double sum_d = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum_c += c[k];
    sum_d += d[k];
  }
  const double span = anchors.f1 - anchors.f0;
  const double closure = sum_c + span * sum_d - span;
  if (std::abs(closure) > tol) {
    verdict.witnesses.push_back({"closure", 0, std::nullopt, closure, "sum c + (f1-f0) sum d != f1-f0"});
  }

  verdict.verdict = verdict.witnesses.empty() ? Verdict::holds : Verdict::fails;
  return verdict;
}

RegularityVerdict monotonicity_classify(const SimilaritySystem& system, const MonotonicityOptions& options) {
  for (std::size_t k = 0; k < system.n(); ++k) {
    if (!(std::abs(system.d()[k]) < 1.0)) {
      throw Error(ErrorCode::Unbounded, "monotonicity needs |d_k| < 1 for all k");
    }
  }
  RegularityVerdict verdict;
  verdict.kind = RegularityKind::monotonicity;
  const double tol = options.tol;
  const std::size_t n = system.n();
  const auto c = system.c();
  const auto d = system.d();
  const auto beta = system.beta();
  const auto alpha = system.alpha();
  const BoundaryAnchors anchors = boundary_anchors(system);

  // f(alpha_k+) = d_k f(0) + beta_k, with f(alpha_{n+1}) = f(1); under f(0)=0,
  // f(1)=1 this is the sequence beta_1, ..., beta_n, beta_{n+1} = 1.
  std::vector<double> starts(n + 1);
  for (std::size_t k = 0; k < n; ++k) starts[k] = d[k] * anchors.f0 + beta[k];
  starts[n] = anchors.f1;
  const double span = anchors.f1 - anchors.f0;

  for (std::size_t k = 0; k < n; ++k) {
    // Rise across segment k: c_k + d_k (f1 - f0), i.e. c_k + d_k when normalized.
    const double rise = c[k] + d[k] * span;
    if (rise < -tol) verdict.witnesses.push_back({"c_plus_d_nonnegative", k + 1, alpha[k], rise, ""});
    const double step = starts[k + 1] - starts[k];
    if (step < -tol) verdict.witnesses.push_back({"beta_nondecreasing", k + 1, alpha[k], step, ""});
    if (k + 1 < n) {
      const double jump = starts[k + 1] - (c[k] + d[k] * anchors.f1 + beta[k]);
      if (jump < -tol) verdict.witnesses.push_back({"no_downward_jump", k + 1, alpha[k + 1], jump, ""});
    }
  }
  if (!verdict.witnesses.empty()) {
    verdict.verdict = Verdict::fails;
    return verdict;
  }

  const bool sufficient = std::all_of(c.begin(), c.end(), [](double v) { return v >= 0.0; }) &&
                          std::all_of(d.begin(), d.end(), [](double v) { return v >= 0.0; });
  if (sufficient) {
    verdict.verdict = Verdict::holds;
    return verdict;
  }

  std::size_t depth = 0;
  std::uint64_t count = 1;
  while (depth < options.fallback_depth && count * n <= options.limits.max_segments) {
    count *= n;
    ++depth;
  }
  verdict.verdict = Verdict::indeterminate;
  if (depth == 0) return verdict;

  const MeshValues values = evaluate_on_mesh(system, anchors, depth, options.limits);
  double best = values.value_left[0];
  double best_at = values.left[0];
  auto visit = [&](double x, double v) -> bool {
    if (v < best - tol) {
      std::ostringstream os;
      os.precision(17);
      os << "f(" << best_at << ") = " << best << " > f(" << x << ") = " << v << " at depth " << depth;
      verdict.witnesses.push_back({"mesh_decrease", 0, x, v - best, os.str()});
      return true;
    }
    if (v > best) {
      best = v;
      best_at = x;
    }
    return false;
  };
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (visit(values.left[i], values.value_left[i]) || visit(values.right[i], values.value_right[i])) {
      verdict.verdict = Verdict::fails;
      break;
    }
  }
  return verdict;
}

VariationCriterion variation_criterion(const SimilaritySystem& system, double tol) {
  if (!system.has_zero_drift()) {
    throw Error(ErrorCode::PreconditionViolated, "zero_drift: variation criterion needs c_k = 0 for all k");
  }
  const RegularityVerdict continuity = continuity_check(system, tol);
  if (continuity.verdict != Verdict::holds) {
    throw Error(ErrorCode::PreconditionViolated, "continuity: the fixed point is not continuous");
  }
  const BoundaryAnchors anchors = boundary_anchors(system);
  if (std::abs(anchors.f0) > tol || std::abs(anchors.f1 - 1.0) > tol) {
    std::ostringstream os;
    os << "normalized: need f(0)=0, f(1)=1, got f(0)=" << anchors.f0 << ", f(1)=" << anchors.f1;
    throw Error(ErrorCode::PreconditionViolated, os.str());
  }

  VariationCriterion result;
  for (double v : system.d()) result.D += std::abs(v);
  result.verdict.kind = RegularityKind::bounded_variation;
  if (result.D <= 1.0 + tol) {
    result.verdict.verdict = Verdict::holds;
  } else {
    result.verdict.verdict = Verdict::fails;
    result.verdict.witnesses.push_back(
        {"D_at_most_one", 0, std::nullopt, result.D - 1.0, "variation over T_m grows as D^m"});
  }
  return result;
}

double variation_on_mesh(const SimilaritySystem& system, std::size_t depth, const MeshLimits& limits) {
  const BoundaryAnchors anchors = boundary_anchors(system);
  const MeshValues values = evaluate_on_mesh(system, anchors, depth, limits);
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    total += std::abs(values.value_right[i] - values.value_left[i]);
    if (i + 1 < values.size()) total += std::abs(values.value_left[i + 1] - values.value_right[i]);
  }
  return total;
}

double stability_bound(const SimilaritySystem& first, const SimilaritySystem& second, Exponent p,
                       double norm_first, double norm_second) {
  const std::size_t n = first.n();
  if (second.n() != n) throw Error(ErrorCode::PartitionMismatch, "systems have different n");
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(first.a()[k] - second.a()[k]) > 1e-15) {
      throw Error(ErrorCode::PartitionMismatch, "systems do not share a partition (a_" + std::to_string(k + 1) + ")");
    }
  }
  const ContractionReport r1 = contraction_factor(first, p);
  const ContractionReport r2 = contraction_factor(second, p);
  if (!r1.contractive || !r2.contractive) {
    throw Error(ErrorCode::NotContractive, "both systems must be contractive at p = " + p.to_string());
  }

  std::vector<double> dc(n), dbeta(n), dd(n);
  for (std::size_t k = 0; k < n; ++k) {
    dc[k] = first.c()[k] - second.c()[k];
    dbeta[k] = first.beta()[k] - second.beta()[k];
    dd[k] = first.d()[k] - second.d()[k];
  }
  const double norms = norm_first + norm_second;
  if (p.is_infinite()) {
    double max_dd = 0.0;
    for (double v : dd) max_dd = std::max(max_dd, std::abs(v));
    const double numerator = 2.0 * weighted_pair_norm(dc, dbeta, p, first.a()) + max_dd * norms;
    return numerator / (2.0 - r1.r_p - r2.r_p);
  }
  const double pv = p.value();
  double dd_sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) dd_sum += first.a()[k] * std::pow(std::abs(dd[k]), pv);
  const double numerator = std::pow(2.0, pv) * weighted_pair_norm(dc, dbeta, p, first.a()) +
                           std::pow(2.0, pv - 1.0) * std::pow(dd_sum, 1.0 / pv) * norms;
  return numerator / (2.0 - std::pow(r1.r_p, 1.0 / pv) - std::pow(r2.r_p, 1.0 / pv));
}

double family_bound(double R, double eps, Exponent p) {
  if (!(R >= 0.0) || !(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::PreconditionViolated, "family bound needs R >= 0 and eps in (0,1)");
  }
  if (p.is_infinite()) return R / eps;
  const double pv = p.value();
  const double r_max = 1.0 - eps;
  if (p.is_integer()) {
    // sum_s ||{c,beta}||_{s,a} <= p R and r_s <= r_p^{s/p} <= (1-eps)^{s/p}.
    const int whole = static_cast<int>(pv);
    double product = 1.0;
    for (int s = 1; s <= whole; ++s) product *= 1.0 - std::pow(r_max, static_cast<double>(s) / pv);
    return whole * R / std::pow(product, 1.0 / pv);
  }
  // The fractional bound's constant involves max_k (|c_k|+|beta_k|), which the
  // family constraints do not control; use ||f|| <= ||G(0)|| / (1 - r_p^{1/p}).
  return R / (1.0 - std::pow(r_max, 1.0 / pv));
}

}  // namespace ssf
