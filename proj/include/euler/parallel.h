#ifndef EULER_PARALLEL_H
#define EULER_PARALLEL_H

#include <cstddef>
#include <functional>

namespace euler {

// Worker cap: EULER_INFLOW_THREADS if set (>=1), else hardware concurrency.
int thread_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous blocks, one per
// worker; fn must only write state owned by index i. Reductions belong in a
// second, sequential pass so results never depend on the thread count. The
// first exception thrown by any worker is rethrown on the caller once all
// workers have joined.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Block variant: fn(begin, end) per worker block, for loops with per-block
// scratch buffers.
void parallel_blocks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace euler

#endif
