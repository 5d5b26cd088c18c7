#pragma once

// Internal grid-enumeration helpers shared by the oracle and region
// engines. Not part of the public headers.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

#include "secrecy/types.hpp"

namespace secrecy::detail {

// One search axis: n samples spanning [lo, hi] with exact endpoints.
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int n = 1;

  double point(int i) const {
    if (i == 0 || n == 1) return lo;
    if (i == n - 1) return hi;
    return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
  }
  double width() const { return hi - lo; }
};

// 4-D product grid over (p1, p2, lambda1, lambda2); flat index order is
// lexicographic in those coordinates.
struct Grid4 {
  Axis p1, p2, l1, l2;

  std::size_t size() const {
    return static_cast<std::size_t>(p1.n) * p2.n * l1.n * l2.n;
  }
  Strategy decode(std::size_t flat) const {
    const int j2 = static_cast<int>(flat % l2.n);
    flat /= l2.n;
    const int j1 = static_cast<int>(flat % l1.n);
    flat /= l1.n;
    const int i2 = static_cast<int>(flat % p2.n);
    const int i1 = static_cast<int>(flat / p2.n);
    return {p1.point(i1), p2.point(i2), l1.point(j1), l2.point(j2)};
  }
};

inline bool lex_less(const Strategy& x, const Strategy& y) {
  if (x.p1 != y.p1) return x.p1 < y.p1;
  if (x.p2 != y.p2) return x.p2 < y.p2;
  if (x.lambda1 != y.lambda1) return x.lambda1 < y.lambda1;
  return x.lambda2 < y.lambda2;
}

// Run fn(begin, end) over [0, total) split into fixed blocks that workers
// claim through an atomic cursor. Each index is processed exactly once,
// so any per-index output is identical for every worker count.
inline void parallel_blocks(std::size_t total, std::size_t workers,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
  constexpr std::size_t kBlock = 4096;
  const std::size_t n_blocks = (total + kBlock - 1) / kBlock;
  std::atomic<std::size_t> cursor{0};

  auto run = [&] {
    for (std::size_t b = cursor.fetch_add(1); b < n_blocks; b = cursor.fetch_add(1))
      fn(b * kBlock, std::min(total, (b + 1) * kBlock));
  };

  workers = std::max<std::size_t>(1, std::min(workers, n_blocks));
  if (workers == 1) {
    run();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 0; w + 1 < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

}  // namespace secrecy::detail
