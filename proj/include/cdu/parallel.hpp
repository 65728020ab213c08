#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cdu {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, count). Work is split into contiguous chunks, one
// per thread. Tasks must be independent; callers that need a deterministic
// result write into per-index slots and reduce sequentially afterwards.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    unsigned t = resolve_threads(threads);
    if (t <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (t > count) t = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(t);
    std::exception_ptr err;
    std::mutex err_mu;
    for (unsigned k = 0; k < t; ++k) {
        std::size_t lo = count * k / t;
        std::size_t hi = count * (k + 1) / t;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace cdu
