#pragma once

#include <cstddef>
#include <functional>

namespace altperm {

// Number of workers used when a caller passes jobs <= 0.
int default_jobs();

// Runs task(0) .. task(count-1) on up to `jobs` threads. Tasks must write
// only to their own slot of any shared output. The first exception thrown
// by a task is rethrown on the calling thread after all workers join.
void run_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& task);

}  // namespace altperm
