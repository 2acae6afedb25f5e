#pragma once

#include <cstddef>
#include <functional>

namespace edgepoly {

/// Worker count used by every parallel loop in the library. 0 restores the
/// default (hardware concurrency).
void set_thread_count(std::size_t n);
std::size_t thread_count();

/// Calls body(begin, end) on disjoint contiguous chunks covering [0, n).
/// Chunk boundaries depend only on n and the worker count; callers reduce
/// per-chunk results in chunk order so results never depend on scheduling.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

/// Calls body(i) for every i in [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace edgepoly
