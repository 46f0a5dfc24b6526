#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace symlab {

/// Worker cap: SYMLAB_THREADS when set, hardware concurrency otherwise.
inline int max_threads() {
  static const int cached = [] {
    if (const char* env = std::getenv("SYMLAB_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
  }();
  return cached;
}

/// Runs fn(begin, end) over contiguous chunks of [0, n). Callers own any
/// per-chunk buffers; merging them in chunk order keeps results deterministic.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
  int workers = max_threads();
  if (workers <= 1 || n < 4096) {
    fn(std::size_t{0}, n);
    return;
  }
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace symlab
