#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace indideal {

// Run fn(begin, end) over contiguous chunks of [0, n). Callers own the
// deterministic merge of per-chunk results; with threads <= 1 this is a
// plain call on the full range.
inline void parallel_chunks(std::size_t n, unsigned threads,
                            const std::function<void(std::size_t, std::size_t, unsigned)>& fn) {
  if (threads <= 1 || n < 2) {
    fn(0, n, 0);
    return;
  }
  unsigned workers = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = std::min(n, w * chunk);
    std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&fn, lo, hi, w] { fn(lo, hi, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace indideal
