#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace cubocubic {

struct Parallelism {
  unsigned threads = 1;

  // CUBOCUBIC_THREADS if set to a positive integer, otherwise the hardware
  // concurrency (at least 1).
  static Parallelism from_env();
};

/// Evaluates fn(i) for i in [0, n) across contiguous chunks and returns the
/// engaged results in index order, independent of the thread count.
template <class T, class Fn>
std::vector<T> parallel_collect(std::uint64_t n, const Parallelism& par, Fn fn) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(par.threads, n));
  std::vector<std::vector<T>> parts(workers);
  auto run = [&](std::uint64_t w) {
    const std::uint64_t lo = n * w / workers;
    const std::uint64_t hi = n * (w + 1) / workers;
    for (std::uint64_t i = lo; i < hi; ++i) {
      std::optional<T> r = fn(i);
      if (r) parts[w].push_back(std::move(*r));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::uint64_t w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();
  }
  std::vector<T> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace cubocubic
