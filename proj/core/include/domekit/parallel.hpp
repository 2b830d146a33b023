#pragma once

#include <cstddef>
#include <functional>

namespace domekit {

/// Worker count: the explicit request if positive, else DOMEKIT_THREADS,
/// else the hardware concurrency (at least 1).
unsigned resolve_threads(int requested = 0);

/// Process-wide default used by the library's parallel sections.
void set_default_threads(unsigned threads);
unsigned default_threads();

/// Calls body(begin, end) on contiguous chunks covering [0, count). Chunk
/// boundaries depend only on count and the thread count, so results written
/// by index are identical for any number of threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body,
                  unsigned threads = 0);

}  // namespace domekit
