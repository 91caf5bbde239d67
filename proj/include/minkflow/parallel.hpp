#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace minkflow {

/// Worker count: hardware concurrency, capped by MINKFLOW_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n). Each index is visited exactly once; callers
/// write into per-index slots so results never depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Pairwise (cascade) summation with a fixed split order, so reductions are
/// bit-identical across runs and thread counts.
double pairwise_sum(std::span<const double> values) noexcept;

}  // namespace minkflow
