#pragma once

// Tiny fan-out helper for embarrassingly parallel batches. Worker count is
// hardware concurrency capped by the MASLOV_LAB_THREADS environment
// variable; results must be written to per-index slots so the outcome is
// deterministic regardless of scheduling.

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace maslovlab {

inline std::size_t worker_count() {
    std::size_t n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("MASLOV_LAB_THREADS")) {
        const long v = std::strtol(cap, nullptr, 10);
        if (v >= 1 && static_cast<std::size_t>(v) < n) n = static_cast<std::size_t>(v);
    }
    return n;
}

template <class F>
void parallel_for(std::size_t count, F&& body, std::size_t workers = 0) {
    if (workers == 0) workers = worker_count();
    workers = std::min(workers, std::max<std::size_t>(1, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) body(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace maslovlab
