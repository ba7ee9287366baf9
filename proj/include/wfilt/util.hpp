#pragma once

#include <functional>

namespace wfilt {

// Worker count from WFILT_THREADS (default 1, clamped to hardware).
int thread_hint();

// Runs f(0..n-1), on thread_hint() workers when that is > 1. Exceptions from
// workers propagate to the caller.
void parallel_for(int n, const std::function<void(int)>& f);

}  // namespace wfilt
