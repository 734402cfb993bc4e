#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dtd {

// Runs f(i) for i in [0, n) on up to `workers` threads. Results are written by
// index, so the caller's reduction order does not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, int workers, F&& f) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto run = [&] {
        for (;;) {
            std::size_t i = next++;
            if (i >= n) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard lk(mu);
                if (!err) err = std::current_exception();
                next = n;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int k = static_cast<int>(std::min<std::size_t>(n, static_cast<std::size_t>(workers)));
    for (int t = 0; t < k; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, int workers, F&& f) {
    std::vector<T> out(n);
    parallel_for(n, workers, [&](std::size_t i) { out[i] = f(i); });
    return out;
}

}  // namespace dtd
