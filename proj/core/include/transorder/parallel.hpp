#pragma once

#include <cstddef>
#include <functional>

namespace transorder {

// Runs fn(0..count-1) over a static partition of `workers` threads. Each index
// must write only to its own slot of caller-owned storage, which makes the
// result independent of scheduling; the serial path (workers <= 1) produces
// identical output. The first exception thrown by any task is rethrown.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace transorder
