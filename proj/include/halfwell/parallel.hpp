#pragma once

#include <cstddef>
#include <functional>

namespace halfwell {

/// Worker count: hardware concurrency, capped by HALFWELL_THREADS when set.
unsigned worker_count();

/// Calls body(i) for i in [0, n). Each index runs exactly once; results must
/// be written to per-index slots so the outcome is independent of scheduling.
/// The first exception thrown by any body is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace halfwell
