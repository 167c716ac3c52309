#pragma once

#include <functional>

namespace magma {

// Largest worker count the build supports (OpenMP thread limit, or 1).
int max_workers();

// Runs fn(0) .. fn(count - 1), fanning out across `workers` threads when
// the build has OpenMP and workers > 1.  Results must be written into
// preallocated per-index slots so the merge order never depends on the
// schedule.  fn must not throw.
void for_each_index(int count, int workers, const std::function<void(int)>& fn);

}  // namespace magma
