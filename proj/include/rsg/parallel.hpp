#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace rsg {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(chunk_index, begin, end) over [0, count) split into fixed-size
// chunks and returns the results in chunk order. The chunk grid depends only
// on count and chunk_size, never on the worker count, so output is identical
// for any thread count.
template <class R, class Fn>
std::vector<R> run_chunked(std::int64_t count, std::int64_t chunk_size, int threads, Fn fn) {
  if (count <= 0) return {};
  if (chunk_size < 1) chunk_size = 1;
  const std::int64_t n_chunks = (count + chunk_size - 1) / chunk_size;
  std::vector<R> results(static_cast<std::size_t>(n_chunks));

  auto run_chunk = [&](std::int64_t c) {
    const std::int64_t begin = c * chunk_size;
    const std::int64_t end = std::min(count, begin + chunk_size);
    results[static_cast<std::size_t>(c)] = fn(c, begin, end);
  };

  const int workers = std::min<std::int64_t>(resolve_threads(threads), n_chunks);
  if (workers <= 1) {
    for (std::int64_t c = 0; c < n_chunks; ++c) run_chunk(c);
    return results;
  }

  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::int64_t c = next.fetch_add(1);
        if (c >= n_chunks) return;
        run_chunk(c);
      }
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace rsg
