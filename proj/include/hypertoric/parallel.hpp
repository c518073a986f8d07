#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hypertoric {

/// Worker count for parallel sweeps: HYPERTORIC_THREADS when set, else the
/// hardware concurrency, clamped to at least 1.
inline unsigned worker_count() {
    if (const char* env = std::getenv("HYPERTORIC_THREADS")) {
        long requested = std::strtol(env, nullptr, 10);
        if (requested >= 1) return static_cast<unsigned>(requested);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, n) across workers. Each index writes only its
/// own output slot, so results are deterministic regardless of scheduling.
template <class Fn>
void parallel_for_index(std::size_t n, Fn&& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace hypertoric
