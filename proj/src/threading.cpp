#include "emw/threading.h"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace emw {

int thread_budget() {
    const char* env = std::getenv("EMW_THREADS");
    if (env) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

// Pure map over [0, n): each index writes only its own slot, so execution
// order never affects results and the reduction stays deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const int budget = thread_budget();
    if (budget <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(budget), n);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                body(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace emw
