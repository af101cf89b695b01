#pragma once

#include <cstddef>
#include <functional>

namespace cobsig {

// Worker count: COBSIG_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index is
// visited exactly once; the first exception thrown is rethrown after all
// workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cobsig
