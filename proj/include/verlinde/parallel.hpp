#pragma once

#include <cstddef>
#include <functional>

namespace verlinde {

/// Worker count: hardware concurrency, capped by VERLINDE_LAB_THREADS when set.
std::size_t worker_count();

/// Runs task(i) for every i in [0, n). Tasks must write only to their own slot;
/// callers merge results in index order, so output never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task);

}  // namespace verlinde
