#pragma once

// Chunked parallel scans over packed element ranges with deterministic
// (task-count independent) reductions.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace pcg {

// Runs fn(task, begin, end) over a partition of [0, total) into `tasks`
// contiguous chunks. fn must not touch shared mutable state.
template <typename Fn>
void parallel_chunks(std::uint64_t total, int tasks, Fn fn) {
  if (tasks < 1) tasks = 1;
  if (total == 0) return;
  if ((std::uint64_t)tasks > total) tasks = (int)total;
  if (tasks == 1) {
    fn(0, (std::uint64_t)0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(tasks);
  std::uint64_t chunk = total / tasks, rem = total % tasks, begin = 0;
  for (int t = 0; t < tasks; ++t) {
    std::uint64_t len = chunk + (t < (int)rem ? 1 : 0);
    pool.emplace_back(fn, t, begin, begin + len);
    begin += len;
  }
  for (auto& th : pool) th.join();
}

// Deterministic minimum over per-task candidate values (e.g. packed witness
// indices). Empty candidates are represented by `none`.
inline std::uint64_t merge_min(const std::vector<std::uint64_t>& per_task,
                               std::uint64_t none) {
  std::uint64_t best = none;
  for (std::uint64_t v : per_task) best = std::min(best, v);
  return best;
}

}  // namespace pcg
