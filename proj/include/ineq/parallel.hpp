// Deterministic parallel helpers: work is split into fixed chunks whose
// results land in caller-owned slots, so outputs never depend on the thread
// count. INEQFORGE_THREADS caps the pool (0 or unset = hardware).
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace ineq {

// splitmix64 step; derives independent per-task seeds from a master seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline int thread_cap() {
    if (const char* env = std::getenv("INEQFORGE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<int>(std::min(v, 256L));
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for every i in [0, count). fn must only write to state owned by
// index i. The first exception thrown by any worker is rethrown here.
inline void parallel_for(long count, const std::function<void(long)>& fn) {
    if (count <= 0) return;
    const int threads = static_cast<int>(std::min<long>(thread_cap(), count));
    if (threads <= 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int t = 0; t < threads; ++t) {
        const long lo = count * t / threads;
        const long hi = count * (t + 1) / threads;
        pool.emplace_back([&, t, lo, hi] {
            try {
                for (long i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace ineq
