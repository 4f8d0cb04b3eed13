#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace rootnum::detail {

inline unsigned worker_count(std::uint64_t tasks) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(hw, std::max<std::uint64_t>(tasks, 1)));
}

// Runs f(i) for i in [0, n) on a small pool; each worker takes a strided
// subset, so f must only touch state owned by i or synchronized state.
template <class F>
void parallel_for(std::uint64_t n, F&& f) {
  unsigned workers = worker_count(n);
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t i = w; i < n; i += workers) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace rootnum::detail
