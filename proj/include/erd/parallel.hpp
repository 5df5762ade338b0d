#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace erd {

// Worker cap: ER_DIRICHLET_THREADS (>= 1) when set, hardware concurrency
// otherwise.
unsigned worker_count();

// Index-parallel loop with deterministic slot-based output: f(i) must only
// write state owned by index i.  Falls back to a plain loop for one worker.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
    const unsigned workers = worker_count();
    if (workers <= 1 || n < 2 * workers) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&f, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace erd
