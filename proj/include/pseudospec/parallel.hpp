#pragma once

#include <cstddef>
#include <functional>

namespace pseudospec {

/// Worker count: PSEUDOSPEC_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Calls body(i) for i in [0, count) on up to worker_count() threads.
/// Indices are handed out dynamically; body must only write to slot i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace pseudospec
