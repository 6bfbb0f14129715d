#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

#include "invmap/core.hpp"

namespace invmap {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn over [0,n) split into a fixed number of chunks. The chunk layout
// does not depend on the worker count, so per-index outputs are identical
// for any --threads value.
inline void parallel_for(long n, int threads,
                         const std::function<void(long, long)>& fn) {
  if (n <= 0) return;
  const int nt = resolve_threads(threads);
  const long nchunks = std::min<long>(n, 64);
  const long step = (n + nchunks - 1) / nchunks;
  if (nt <= 1 || n < 1024) {
    for (long c = 0; c < nchunks; ++c)
      fn(c * step, std::min(n, (c + 1) * step));
    return;
  }
  std::atomic<long> next{0};
  auto worker = [&] {
    for (;;) {
      const long c = next.fetch_add(1);
      if (c >= nchunks) return;
      fn(c * step, std::min(n, (c + 1) * step));
    }
  };
  std::vector<std::thread> pool;
  const int nw = static_cast<int>(std::min<long>(nt, nchunks));
  pool.reserve(nw);
  for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Deterministic reduction: per-chunk compensated partial sums combined in
// chunk order, bitwise identical across runs and thread counts.
inline double parallel_sum(long n, int threads,
                           const std::function<double(long)>& term) {
  if (n <= 0) return 0.0;
  const long nchunks = std::min<long>(n, 64);
  const long step = (n + nchunks - 1) / nchunks;
  std::vector<double> partial(nchunks, 0.0);
  parallel_for(n, threads, [&](long lo, long hi) {
    const long c = lo / step;
    Ksum acc;
    for (long i = lo; i < hi; ++i) acc.add(term(i));
    partial[c] = acc.value();
  });
  Ksum total;
  for (double v : partial) total.add(v);
  return total.value();
}

}  // namespace invmap
