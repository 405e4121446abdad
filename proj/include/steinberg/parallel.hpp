#pragma once

#include <cstddef>
#include <functional>

namespace steinberg {

/// Worker cap from STEINBERG_THREADS, else the hardware concurrency; at least 1.
std::size_t worker_count();

/// Calls f(i) for i in [0, n) across worker threads. f must only write to
/// per-index state, so results never depend on the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace steinberg
