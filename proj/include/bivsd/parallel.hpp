#pragma once

#include <cstddef>
#include <functional>

namespace bivsd {

// Worker count resolution: an explicit request wins, otherwise the
// BIVSD_THREADS environment variable, otherwise hardware concurrency.
unsigned effective_threads(unsigned requested);

// Runs fn(i) for i in [begin, end), statically partitioned over the workers.
// The first exception thrown by any worker is rethrown after all join.
void parallel_for(std::size_t begin, std::size_t end, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace bivsd
