#pragma once

#include <cstddef>
#include <functional>

namespace cartfact {

/// Worker count from CARTFACT_THREADS: 0 means sequential, unset means the
/// hardware concurrency.
std::size_t configured_threads();

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index
/// runs exactly once; with threads <= 1 everything runs inline in order.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace cartfact
