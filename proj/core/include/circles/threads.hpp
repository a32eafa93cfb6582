#pragma once

#include <cstddef>
#include <functional>

namespace circles {

// Worker count for parallel stages: min(hardware_concurrency, CIRCLES_THREADS
// if set). Always at least 1.
int worker_count();

// Runs f(begin, end) over [0, n) split into contiguous chunks, one per worker.
// Chunking is fixed by (n, workers) only, so any deterministic per-chunk
// output can be merged reproducibly.
void parallel_chunks(std::size_t n, int workers, const std::function<void(std::size_t, std::size_t)>& f);

}  // namespace circles
