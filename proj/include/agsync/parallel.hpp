#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace agsync {

/// Runs fn(shard) for shard = 0..shard_count-1 on up to `threads` workers
/// and returns the results indexed by shard, so any fold over them in index
/// order is independent of the thread count. The first exception thrown by
/// a worker stops the pool and is rethrown.
template <class Result, class Fn>
std::vector<Result> run_shards(std::uint64_t shard_count, unsigned threads, Fn &&fn) {
    std::vector<Result> results(shard_count);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (true) {
            const auto shard = next.fetch_add(1);
            if (shard >= shard_count)
                return;
            try {
                results[shard] = fn(shard);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next.store(shard_count);
            }
        }
    };

    const auto workers = static_cast<unsigned>(
        std::min<std::uint64_t>(std::max(1U, threads), std::max<std::uint64_t>(shard_count, 1)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i)
            pool.emplace_back(worker);
    }
    if (error)
        std::rethrow_exception(error);
    return results;
}

} // namespace agsync
