#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "ssf/execution.hpp"
#include "ssf/exponent.hpp"
#include "ssf/piecewise.hpp"
#include "ssf/system.hpp"

namespace ssf {

struct SolveOptions {
  Exponent p{1.0};
  double target_error = 1e-8;
  std::size_t max_iterations = 200;
  /// Stop before an iteration whose image could exceed this many pieces.
  std::size_t max_pieces = 10'000'000;
  /// Starting function; defaults to f_0(x) = x.
  std::optional<PiecewiseLinearFn> seed;
  Execution execution = Execution::parallel;
};

enum class SolveStatus { converged, depth_exceeded };

std::string_view to_string(SolveStatus status) noexcept;

struct SolveResult {
  PiecewiseLinearFn approximant = PiecewiseLinearFn::identity();
  std::size_t iterations = 0;
  /// Lipschitz constant of G in L_p: r_p^{1/p}, or r_inf.
  double contraction_q = 0.0;
  /// q / (1 - q) * ||f_m - f_{m-1}||_p; bounds ||f - f_m||_p for the fixed point f.
  double aposteriori_error = 0.0;
  double last_step = 0.0;
  SolveStatus status = SolveStatus::converged;
};

/// Picard iteration f_m = G(f_{m-1}) until the a-posteriori bound reaches the
/// target, the iteration limit, or the piece cap. Throws NotContractive.
SolveResult solve(const SimilaritySystem& system, const SolveOptions& options = {});

}  // namespace ssf
