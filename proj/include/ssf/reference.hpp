#pragma once

#include "ssf/exponent.hpp"
#include "ssf/mesh.hpp"
#include "ssf/piecewise.hpp"
#include "ssf/system.hpp"

/// Straightforward serial implementations of the parallel kernels. They take
/// different routes through the public API and exist to cross-check the
/// kernels in tests and to serve as the baseline in bench/.
namespace ssf::reference {

/// Builds each image piece from the definition G(f)(x) = beta_k + c_k t + d_k f(t)
/// using the one-sided evaluation API of f.
PiecewiseLinearFn apply_G(const SimilaritySystem& system, const PiecewiseLinearFn& f);

/// Sums exact piece integrals over the sorted union of breakpoints in a single loop.
double lp_distance(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g, Exponent p);

/// Per-code evaluation with code_to_segment and exact_value_at_code_point.
MeshValues evaluate_on_mesh(const SimilaritySystem& system, const BoundaryAnchors& anchors, std::size_t depth);

/// Mesh points from code_to_segment over every code.
Mesh build_mesh(const SimilaritySystem& system, std::size_t depth);

}  // namespace ssf::reference
