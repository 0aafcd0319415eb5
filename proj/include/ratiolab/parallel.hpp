#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace ratiolab::detail {

inline int clamp_jobs(int jobs) { return jobs < 1 ? 1 : jobs; }

// Splits [0, total) into fixed blocks and hands (block_index, lo, hi) to fn
// from a worker pool. Block boundaries depend only on (total, block_size), so
// per-block results can be merged in index order for output that is
// independent of the thread count.
template <typename Fn>
void parallel_blocks(std::uint64_t total, std::uint64_t block_size, int jobs, Fn&& fn) {
  jobs = clamp_jobs(jobs);
  if (total == 0) return;
  if (block_size == 0) block_size = 1;
  const std::uint64_t nblocks = (total + block_size - 1) / block_size;
  if (jobs == 1 || nblocks == 1) {
    for (std::uint64_t b = 0; b < nblocks; ++b)
      fn(b, b * block_size, std::min(total, (b + 1) * block_size));
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      fn(b, b * block_size, std::min(total, (b + 1) * block_size));
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), nblocks));
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace ratiolab::detail
