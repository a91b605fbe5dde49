#pragma once

#include "ssf/execution.hpp"
#include "ssf/exponent.hpp"
#include "ssf/piecewise.hpp"

namespace ssf {

/// Exact integral of |h|^p over an interval of length `width` on which h is
/// affine with end values h0, h1. Uses the antiderivative of |.|^p in a form
/// that stays accurate when |h0| and |h1| are close.
double affine_power_integral(double width, double h0, double h1, double p) noexcept;

/// ||f - g||_p by exact piecewise integration over the common refinement.
/// For p = inf, the maximum of one-sided limits at all breakpoints.
double lp_distance(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g, Exponent p,
                   Execution execution = Execution::parallel);

double lp_norm(const PiecewiseLinearFn& f, Exponent p, Execution execution = Execution::parallel);

}  // namespace ssf
