#pragma once

#include <cstddef>
#include <functional>

namespace holobrace::detail {

/// Worker count: hardware concurrency, capped by HOLOBRACE_THREADS when set.
std::size_t thread_count();

/// Calls fn(i) for i in [0, n) across worker threads. Callers write results
/// into per-index slots so the outcome does not depend on scheduling. The
/// first exception thrown by any call is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace holobrace::detail
