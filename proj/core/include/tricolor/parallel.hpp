#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace tricolor {

// Worker cap: TRICOLOR_THREADS if set (minimum 1), else hardware concurrency.
unsigned worker_count();

// Runs fn(0..count-1) across workers and returns the results in index order,
// so parallel and sequential runs produce identical output. The first worker
// exception, if any, is rethrown after all threads join.
template <typename Fn>
auto parallel_map(std::size_t count, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<std::optional<Result>> slots(count);
    const unsigned workers = std::min<std::size_t>(worker_count(), count);

    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i] = fn(i);
    } else {
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= count) return;
                    try {
                        slots[i] = fn(i);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<Result> out;
    out.reserve(count);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

} // namespace tricolor
