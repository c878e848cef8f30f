// Minimal contiguous-chunk thread pool helper. Chunks are disjoint and
// assigned deterministically, so writes to per-index output slots never race
// and results do not depend on scheduling.
#pragma once

#include <cstddef>
#include <functional>

namespace splineradon {

// Number of worker threads: hardware concurrency, capped by the
// SPLINE_RADON_THREADS environment variable when set.
std::size_t thread_budget();

// Invokes fn(begin, end) on contiguous disjoint ranges covering [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace splineradon
