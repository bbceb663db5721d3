// Minimal fork-join helper for independent tasks.
#ifndef EXTLINE_PARALLEL_HPP_
#define EXTLINE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace extline {

/// Worker count: EXTLINE_THREADS if set and positive, else hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(0) ... body(count - 1) on up to `workers` threads. The first
/// exception thrown by any task is rethrown after all threads finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, std::size_t workers = 0);

}  // namespace extline

#endif  // EXTLINE_PARALLEL_HPP_
