// parallel.hpp — bounded deterministic parallel map over index ranges

#pragma once

#include <cstddef>
#include <functional>

namespace plexsim {

// Worker cap: min(hardware concurrency, PLEXSIM_THREADS if set, job count).
std::size_t worker_count(std::size_t jobs);

// Run fn(0..n-1), each index exactly once, on up to worker_count(n) threads.
// Callers write results into per-index slots so assembly order is
// deterministic regardless of scheduling. The first exception thrown by any
// job is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace plexsim
