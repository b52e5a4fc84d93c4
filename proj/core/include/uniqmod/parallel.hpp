#pragma once

#include <cstddef>
#include <functional>

namespace uniqmod {

/// Worker count: UNIQMOD_THREADS if set to a positive integer, else the hardware
/// concurrency (at least 1).
unsigned worker_count();

/// Runs body(begin, end) over contiguous chunks of [0, count) on up to
/// worker_count() threads. Each index is visited exactly once.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace uniqmod
