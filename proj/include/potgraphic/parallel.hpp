#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace potgraphic {

/// Runs fn(i) for i in [0, count) on up to `threads` workers pulling indices
/// from a shared counter. Results must be written to per-index slots so the
/// merged outcome does not depend on the schedule. If any call throws, the
/// exception of the lowest failing index is rethrown after all workers stop.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn && fn)
{
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};

    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            if (failed.load(std::memory_order_relaxed))
                break;
            try {
                fn(i);
            }
            catch (...) {
                errors[i] = std::current_exception();
                failed = true;
            }
        }
    };

    const auto workers = static_cast<std::size_t>(threads < 1 ? 1 : threads);
    if (workers == 1 || count < 2) {
        worker();
    }
    else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers && w < count; ++w)
            pool.emplace_back(worker);
    }

    for (auto & e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace potgraphic
