#pragma once

#include <cstddef>
#include <functional>

namespace momspec {

// Worker count from MOMSPEC_THREADS, else hardware concurrency.
unsigned thread_count();

// Calls body(i) for i in [0, count). Each index is handled exactly once and
// results written by index are deterministic regardless of thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace momspec
