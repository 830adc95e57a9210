#pragma once

#include <cstddef>
#include <functional>

namespace fts::parallel {

/// Worker cap for all parallel kernels. Defaults to the hardware
/// concurrency; 1 disables threading, 0 restores the default. Results
/// never depend on the cap: every parallel loop writes to per-index
/// slots, so output is identical for any worker count or schedule.
int max_workers();
void set_max_workers(int workers);

/// Runs fn(i) for i in [0, n), distributing indices across up to
/// max_workers() threads. Nested calls run inline on the calling thread.
/// The first exception thrown by any fn is rethrown after all workers
/// finished.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace fts::parallel
