#pragma once

#include <cstddef>

namespace ssf {

/// Selects between the OpenMP kernels and a plain loop over the same kernel.
/// Both produce identical (or, for reductions, chunk-order-identical) results.
enum class Execution { serial, parallel };

/// Reductions are split into fixed-size chunks whose partial sums are combined
/// in index order, so results do not depend on the thread count.
inline constexpr std::size_t kReductionChunk = 4096;

}  // namespace ssf
