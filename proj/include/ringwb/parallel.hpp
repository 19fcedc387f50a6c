#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace ringwb {

// Smallest index in [0, n) accepted by pred, or nullopt.
//
// With jobs > 1 the range is split into contiguous chunks scanned by worker
// threads and the minimum over all hits wins, so the result is independent
// of scheduling. Workers skip indices that can no longer beat a known hit.
template <class Pred>
std::optional<std::uint64_t> find_first(std::uint64_t n, int jobs, Pred pred) {
  if (jobs <= 1 || n < 4096) {
    for (std::uint64_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  const std::uint64_t workers =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), n);
  std::atomic<std::uint64_t> best{n};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t lo = n / workers * w + std::min(n % workers, w);
      const std::uint64_t hi = lo + n / workers + (w < n % workers ? 1 : 0);
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        if (pred(i)) {
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  const std::uint64_t r = best.load();
  if (r == n) return std::nullopt;
  return r;
}

}  // namespace ringwb
