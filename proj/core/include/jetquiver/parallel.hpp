#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace jetquiver {

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index
/// is processed exactly once; with threads <= 1 the loop is serial. The
/// body must be safe to run concurrently for distinct indices.
template <typename Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
  if (count == 0) return;
  if (threads > static_cast<int>(count)) threads = static_cast<int>(count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      body(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads) - 1);
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
}

/// Hardware default, honoring request caps elsewhere.
inline int default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace jetquiver
