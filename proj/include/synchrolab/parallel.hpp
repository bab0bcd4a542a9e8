#pragma once

#include <cstddef>
#include <functional>

namespace synchrolab {

// Worker count from SYNCHROLAB_JOBS, else the hardware concurrency (at least 1).
std::size_t default_jobs();

// Calls task(index) for every index in [0, count) from up to `jobs` threads.
// Indices are handed out dynamically, so callers must write results into
// per-index slots and combine them afterwards in index order. The first
// exception thrown by a task is rethrown after all threads finish.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& task);

}  // namespace synchrolab
