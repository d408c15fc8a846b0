#pragma once

#include <cstddef>
#include <functional>

namespace deltaspec {

/// Process-wide worker count for data-parallel sweeps (1 = serial).
void set_thread_count(int n);
int thread_count();

/// Runs fn(i) for i in [0, n).  Iterations must be independent; each writes
/// only its own output slot, so results do not depend on the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace deltaspec
