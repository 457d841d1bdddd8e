#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace balkit {

// Thread cap: BALKIT_THREADS env var, else hardware concurrency.
inline unsigned max_threads() {
    if (const char* env = std::getenv("BALKIT_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Deterministic parallel index loop: body(i) must only write state owned by i.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    unsigned threads = std::min<std::size_t>(max_threads(), n);
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += threads) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace balkit
