#pragma once

#include "ssf/execution.hpp"
#include "ssf/piecewise.hpp"
#include "ssf/system.hpp"

namespace ssf {

struct OperatorOptions {
  Execution execution = Execution::parallel;
  /// Merge continuous collinear neighbours after the map (see simplified()).
  bool simplify = true;
};

/// Similarity operator G. On (alpha_k, alpha_{k+1}) the image is
///   G(f)(x) = beta_k + c_k t + d_k f(t),   t = (x - alpha_k) / a_k,
/// so every piece of f contributes one piece to each of the n blocks. One-sided
/// values of f at its breakpoints (including jumps) are carried over exactly.
PiecewiseLinearFn apply_G(const SimilaritySystem& system, const PiecewiseLinearFn& f,
                          const OperatorOptions& options = {});

}  // namespace ssf
