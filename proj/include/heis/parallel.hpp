#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace heis {

int thread_count();           // HEIS_THREADS env override, else hardware concurrency
void set_thread_count(int);   // 0 restores the default

// Partitions [0, n) into contiguous chunks, one per worker. fn(begin, end)
// must write only to per-index slots so results stay deterministic; any
// reduction is done by the caller in index order afterwards.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
    const std::size_t workers =
        std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, thread_count())));
    if (workers <= 1 || n < 2) {
        fn(std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t b = w * chunk, e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace heis
