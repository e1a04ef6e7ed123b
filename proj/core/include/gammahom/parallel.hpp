#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gammahom {

/// Runs body(i) for every i in [0, count) on up to `workers` threads. Each
/// index runs exactly once; callers write results into slot i so that output
/// order never depends on scheduling. The first exception thrown is
/// rethrown after all threads have joined.
template <typename Body>
auto parallel_for(std::size_t count, unsigned workers, Body && body) -> void
{
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run = [&] {
        while (true) {
            auto i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count)
                return;
            try {
                body(i);
            }
            catch (...) {
                std::lock_guard lock{failure_mutex};
                if (! failure)
                    failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };

    auto thread_count = std::min<std::size_t>(workers, count);
    {
        std::vector<std::jthread> threads;
        threads.reserve(thread_count);
        for (std::size_t t = 0; t < thread_count; ++t)
            threads.emplace_back(run);
    }

    if (failure)
        std::rethrow_exception(failure);
}

}
