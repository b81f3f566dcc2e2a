#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace p4geo {

/// Worker count: P4GEO_THREADS when set and positive, else the hardware
/// concurrency (at least 1).
inline unsigned worker_count() {
  if (const char* env = std::getenv("P4GEO_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1u;
}

/// Runs fn(lo, hi, slot) over a partition of [begin, end) into contiguous
/// chunks, one slot per worker.  Results keyed by slot stay deterministic
/// regardless of scheduling.
template <typename Fn>
void parallel_chunks(long long begin, long long end, Fn&& fn) {
  long long n = end - begin;
  if (n <= 0) return;
  unsigned workers = worker_count();
  if (workers > static_cast<unsigned long long>(n))
    workers = static_cast<unsigned>(n);
  if (workers <= 1) {
    fn(begin, end, 0u);
    return;
  }
  std::vector<std::thread> pool;
  long long chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    long long lo = begin + chunk * w;
    long long hi = lo + chunk < end ? lo + chunk : end;
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi, w] { fn(lo, hi, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace p4geo
