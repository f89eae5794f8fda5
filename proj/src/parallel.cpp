#include "heis/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace heis {

namespace {
std::atomic<int> g_threads{0};

int default_threads() {
    if (const char* env = std::getenv("HEIS_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}
}  // namespace

int thread_count() {
    const int v = g_threads.load(std::memory_order_relaxed);
    return v > 0 ? v : default_threads();
}

void set_thread_count(int n) { g_threads.store(n, std::memory_order_relaxed); }

}  // namespace heis
