#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace beauville::detail {

// Runs job(shard) for shard in [0, shards) on up to `threads` workers and returns the
// results indexed by shard, so the merged output never depends on scheduling.
template <class Result, class Job>
std::vector<Result> run_sharded(std::size_t shards, unsigned threads, Job&& job) {
  std::vector<Result> results(shards);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(shards, 1)));
  if (workers <= 1) {
    for (std::size_t s = 0; s < shards; ++s) results[s] = job(s);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t s = next++; s < shards; s = next++) {
          try {
            results[s] = job(s);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace beauville::detail
