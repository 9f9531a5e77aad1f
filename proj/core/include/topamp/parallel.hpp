#pragma once

#include <functional>

namespace topamp {

/// Worker count: explicit argument > TOPAMP_THREADS env > hardware concurrency.
int thread_count(int requested = 0);

/// Run fn(i) for i in [0, n) across a worker pool. Work items must be
/// independent; each writes only its own output slot, so results do not
/// depend on the schedule.
void parallel_for(int n, const std::function<void(int)>& fn, int n_threads = 0);

}  // namespace topamp
