#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eprsim {

/// Samples per work block. Block boundaries are fixed by this constant alone,
/// so partial results never depend on the worker count.
inline constexpr std::size_t kBlockSize = 4096;

inline std::size_t block_count(std::size_t n) { return (n + kBlockSize - 1) / kBlockSize; }

/// Worker count from EPRSIM_WORKERS, or 1 when unset or invalid.
unsigned default_workers();

/// Calls body(block) for every block in [0, n_blocks). Blocks are dealt to
/// workers round-robin; callers write per-block results into pre-sized slots
/// and reduce them in block order afterwards. The first exception thrown by
/// any worker is rethrown on the calling thread.
template <class Body>
void parallel_blocks(std::size_t n_blocks, unsigned workers, Body&& body) {
    if (workers <= 1 || n_blocks <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) body(b);
        return;
    }
    const std::size_t n_threads = std::min<std::size_t>(workers, n_blocks);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> threads;
        threads.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) {
            threads.emplace_back([&, t] {
                try {
                    for (std::size_t b = t; b < n_blocks; b += n_threads) body(b);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace eprsim
