// Deterministic work partitioning. Chunks are processed by up to `jobs`
// threads pulling from a shared counter; results land in a slot per chunk and
// are merged in chunk order, so the merged result never depends on
// scheduling or on the number of workers.
#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace gallai {

template <typename R, typename Fn>
std::vector<R> run_chunked(int n_chunks, int jobs, Fn&& fn) {
  std::vector<R> out(static_cast<std::size_t>(n_chunks));
  if (n_chunks == 0) return out;
  if (jobs <= 1 || n_chunks == 1) {
    for (int c = 0; c < n_chunks; ++c) out[c] = fn(c);
    return out;
  }
  const int workers = std::min(jobs, n_chunks);
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        const int c = next.fetch_add(1);
        if (c >= n_chunks) return;
        out[c] = fn(c);
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace gallai
