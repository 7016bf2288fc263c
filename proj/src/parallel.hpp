#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace smooth::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, n) into contiguous chunks and runs fn(begin, end, chunk) for
// each. Chunk boundaries depend only on n and the thread count; callers that
// concatenate per-chunk results in chunk order get deterministic output.
template <class Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn,
                     std::size_t min_items = 64) {
  threads = resolve_threads(threads);
  std::size_t chunks = std::min<std::size_t>(threads, n);
  if (chunks <= 1 || n < min_items) {
    fn(std::size_t{0}, n, std::size_t{0});
    return;
  }
  std::vector<std::future<void>> tasks;
  tasks.reserve(chunks);
  for (std::size_t k = 0; k < chunks; ++k) {
    std::size_t begin = n * k / chunks;
    std::size_t end = n * (k + 1) / chunks;
    tasks.push_back(std::async(std::launch::async, [&fn, begin, end, k] {
      fn(begin, end, k);
    }));
  }
  for (auto& t : tasks) t.get();
}

inline std::size_t chunk_count(std::size_t n, unsigned threads,
                               std::size_t min_items = 64) {
  threads = resolve_threads(threads);
  std::size_t chunks = std::min<std::size_t>(threads, n);
  if (chunks <= 1 || n < min_items) return 1;
  return chunks;
}

}  // namespace smooth::detail
