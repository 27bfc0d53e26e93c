#pragma once

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "enumerate.hpp"

namespace permcount {

inline int default_workers() {
  unsigned h = std::thread::hardware_concurrency();
  return h ? static_cast<int>(h) : 1;
}

// Sum fn(item) over a vector, splitting items round-robin across workers.
// Each slot accumulates independently and slots merge in index order, so the
// result (and any overflow throw) is independent of thread scheduling.
template <class T, class Fn>
u64 parallel_sum(const std::vector<T>& items, int workers, Fn fn) {
  if (workers < 1) workers = 1;
  const std::size_t n = items.size();
  if (workers == 1 || n < 256) {
    u64 total = 0;
    for (const T& it : items) total = checked_add(total, fn(it));
    return total;
  }
  if (static_cast<std::size_t>(workers) > n) workers = static_cast<int>(n);
  std::vector<u64> slot(static_cast<std::size_t>(workers), 0);
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex mu;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        u64 acc = 0;
        for (std::size_t t = static_cast<std::size_t>(w); t < n; t += static_cast<std::size_t>(workers))
          acc = checked_add(acc, fn(items[t]));
        slot[static_cast<std::size_t>(w)] = acc;
      } catch (...) {
        std::lock_guard<std::mutex> g(mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  u64 total = 0;
  for (u64 s : slot) total = checked_add(total, s);
  return total;
}

}  // namespace permcount
