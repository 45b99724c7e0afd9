#pragma once

#include <cstddef>
#include <functional>

namespace emw {

// Thread budget: EMW_THREADS when set (>=1), else 1. Parallel regions are pure
// maps into disjoint slots, so results do not depend on the thread count.
int thread_budget();

// fn(i) for i in [0, n), split into contiguous blocks across the budget.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace emw
