#pragma once

#include <functional>

namespace lupi::detail {

// Runs fn(0), ..., fn(count-1) across up to hardware_concurrency() threads.
// Iterations must be independent; each should write only to its own
// preallocated slot so results never depend on scheduling. Falls back to a
// plain loop for tiny counts or single-core machines.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace lupi::detail
