#include "ssf/solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ssf/error.hpp"
#include "ssf/lp.hpp"
#include "ssf/operator.hpp"

namespace ssf {

std::string_view to_string(SolveStatus status) noexcept {
  return status == SolveStatus::converged ? "converged" : "depth_exceeded";
}

SolveResult solve(const SimilaritySystem& system, const SolveOptions& options) {
  const ContractionReport report = contraction_factor(system, options.p);
  if (!report.contractive) {
    std::ostringstream os;
    os << "r_" << options.p.to_string() << " = " << report.r_p << " >= 1";
    throw Error(ErrorCode::NotContractive, os.str());
  }
  const double q = options.p.is_infinite() ? report.r_p : std::pow(report.r_p, 1.0 / options.p.value());
  const double factor = q / (1.0 - q);

  SolveResult result;
  result.contraction_q = q;
  result.approximant = options.seed.value_or(PiecewiseLinearFn::identity());
  result.aposteriori_error = std::numeric_limits<double>::infinity();
  result.last_step = std::numeric_limits<double>::infinity();
  result.status = SolveStatus::depth_exceeded;

  const OperatorOptions op{options.execution, true};
  for (std::size_t m = 1; m <= options.max_iterations; ++m) {
    if (result.approximant.pieces() * system.n() > options.max_pieces) break;
    PiecewiseLinearFn next = apply_G(system, result.approximant, op);
    const double step = lp_distance(next, result.approximant, options.p, options.execution);
    result.approximant = std::move(next);
    result.iterations = m;
    result.last_step = step;
    result.aposteriori_error = factor * step;
    if (result.aposteriori_error <= options.target_error) {
      result.status = SolveStatus::converged;
      break;
    }
  }
  return result;
}

}  // namespace ssf
