#pragma once

#include <cstddef>
#include <functional>

namespace fraclab {

/// Worker count: FRACLAB_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
int worker_count();

/// Runs body(i) for i in [0, count) split into contiguous chunks over the
/// worker pool. Each index is visited exactly once, so per-index results are
/// independent of the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace fraclab
