#pragma once

#include <cstddef>
#include <functional>

namespace fracwave {

/// Worker count for sweeps: FRACWAVE_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads.
/// Each index is visited exactly once; the first exception thrown by any
/// body is rethrown on the calling thread after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace fracwave
