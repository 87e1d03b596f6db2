#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace nullify {

// runs f(0..n-1) on up to `jobs` threads; the first exception is rethrown
inline void parallel_for(int n, int jobs, const std::function<void(int)> &f) {
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex mu;
    auto work = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < std::min(std::max(1, jobs), n); ++j) pool.emplace_back(work);
    work();
    for (auto &t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace nullify
