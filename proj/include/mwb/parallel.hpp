#pragma once

// Minimal fan-out over an index range. Workers pull indices from a shared
// counter; results land in per-index slots, so the output never depends on
// scheduling.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mwb {

inline std::size_t default_jobs() {
    auto n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

template <class Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> workers;
        workers.reserve(jobs);
        for (std::size_t w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                try {
                    for (std::size_t i = next++; i < count; i = next++) fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            });
    }
    if (error) std::rethrow_exception(error);
}

template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, std::size_t jobs, Fn&& fn) {
    std::vector<R> out(count);
    parallel_for(count, jobs, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace mwb
