#pragma once
#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "perm.hpp"

namespace permcount {

using u64 = std::uint64_t;

// counters are 64-bit; overflow is an error, never silent wraparound
inline u64 checked_add(u64 a, u64 b) {
  if (a > std::numeric_limits<u64>::max() - b) throw std::overflow_error("count exceeds 64 bits");
  return a + b;
}
inline u64 checked_mul(u64 a, u64 b) {
  if (b != 0 && a > std::numeric_limits<u64>::max() / b)
    throw std::overflow_error("count exceeds 64 bits");
  return a * b;
}

inline u64 factorial(int n) {
  u64 r = 1;
  for (int k = 2; k <= n; ++k) r = checked_mul(r, static_cast<u64>(k));
  return r;
}

inline u64 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  u64 r = 1;
  for (int t = 1; t <= k; ++t) r = checked_mul(r, static_cast<u64>(n - k + t)) / t;
  return r;
}

// unsigned Stirling numbers of the first kind: |{sigma in S_n : c(sigma)=k}|,
// via c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
inline u64 stirling_first(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n == 0) return 1;
  std::vector<u64> row(static_cast<size_t>(n) + 1, 0);
  row[1] = 1;
  for (int m = 2; m <= n; ++m)
    for (int j = m; j >= 1; --j)
      row[j] = checked_add(row[j - 1], checked_mul(static_cast<u64>(m - 1), row[j]));
  return row[k];
}

// (1/n) C(n,k) C(n,k-1): noncrossing partitions of {1..n} with k blocks
inline u64 narayana(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("narayana needs 1 <= k <= n");
  return checked_mul(binomial(n, k), binomial(n, k - 1)) / static_cast<u64>(n);
}

// z_lambda = prod s^{m_s} m_s!; class size is n!/z_lambda
inline u64 class_size(const std::vector<int>& type) {
  int n = std::accumulate(type.begin(), type.end(), 0);
  u64 z = 1;
  for (size_t t = 0; t < type.size();) {
    size_t u = t;
    while (u < type.size() && type[u] == type[t]) ++u;
    int mult = static_cast<int>(u - t);
    for (int q = 0; q < mult; ++q) z = checked_mul(z, static_cast<u64>(type[t]));
    z = checked_mul(z, factorial(mult));
    t = u;
  }
  return factorial(n) / z;
}

// partitions of n into exactly `parts` weakly decreasing parts, descending-lex order
inline std::vector<std::vector<int>> partitions_with_parts(int n, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int left, int maxpart) -> void {
    if (left == 0) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    int hi = std::min(maxpart, rest - (left - 1));  // leave >= 1 per remaining part
    for (int p = hi; p >= 1; --p) {
      if (static_cast<long long>(p) * left < rest) break;  // too small to ever finish
      cur.push_back(p);
      self(self, rest - p, left - 1, p);
      cur.pop_back();
    }
  };
  if (parts >= 0 && parts <= n) rec(rec, n, parts, n);
  return out;
}

inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  for (int parts = 1; parts <= n; ++parts)
    for (auto& p : partitions_with_parts(n, parts)) out.push_back(std::move(p));
  return out;
}

// canonical class representative: points 1..n assigned to the parts in order,
// e.g. (3,2,1) -> (1 2 3)(4 5)
inline Perm class_representative(const std::vector<int>& type) {
  int n = std::accumulate(type.begin(), type.end(), 0);
  Perm p(n);
  int next = 1;
  for (int len : type) {
    std::vector<int> pts(static_cast<size_t>(len));
    std::iota(pts.begin(), pts.end(), next);
    next += len;
    for (size_t t = 0; t < pts.size(); ++t)
      p.set0(pts[t] - 1, static_cast<std::uint8_t>(pts[(t + 1) % pts.size()] - 1));
  }
  return p;
}

/*
 * Visit every permutation of a conjugacy class exactly once, in a fixed
 * order.  The smallest point not yet placed starts the next cycle, so each
 * cycle is produced in canonical rotation; when several parts share a size
 * only one of them can receive that point, which kills the duplicates that
 * interchangeable equal-length cycles would otherwise produce.  The rest of
 * the cycle runs over ordered arrangements of unused points, ascending.
 */
template <class Fn>
void for_each_in_class(const std::vector<int>& type, Fn&& fn) {
  int n = std::accumulate(type.begin(), type.end(), 0);
  if (n < 1 || n > max_degree) throw std::invalid_argument("class degree out of range");
  std::vector<int> sizes(type);
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  Perm p(n);
  std::uint32_t used = 0;
  std::vector<int> cyc;
  cyc.reserve(static_cast<size_t>(n));

  // cyc[base..] holds the cycle under construction; earlier entries belong to
  // cycles already written into p and must not be touched here
  auto emit_cycle = [&](auto&& self_arrange, auto&& self_place, int size,
                        size_t base) -> void {
    if (static_cast<int>(cyc.size() - base) == size) {
      for (size_t t = base; t < cyc.size(); ++t)
        p.set0(cyc[t],
               static_cast<std::uint8_t>(cyc[t + 1 < cyc.size() ? t + 1 : base]));
      self_place(self_place);
      for (size_t t = base; t < cyc.size(); ++t)
        p.set0(cyc[t], static_cast<std::uint8_t>(cyc[t]));
      return;
    }
    for (int q = 0; q < n; ++q) {
      if ((used >> q) & 1) continue;
      used |= 1u << q;
      cyc.push_back(q);
      self_arrange(self_arrange, self_place, size, base);
      cyc.pop_back();
      used &= ~(1u << q);
    }
  };

  auto place = [&](auto&& self_place) -> void {
    int start = -1;
    for (int q = 0; q < n; ++q)
      if (!((used >> q) & 1)) { start = q; break; }
    if (start < 0) {
      fn(static_cast<const Perm&>(p));
      return;
    }
    int prev = 0;
    for (size_t t = 0; t < sizes.size(); ++t) {
      if (sizes[t] == 0 || sizes[t] == prev) continue;  // once per distinct size
      prev = sizes[t];
      int size = sizes[t];
      sizes[t] = 0;
      used |= 1u << start;
      cyc.push_back(start);
      emit_cycle(emit_cycle, self_place, size, cyc.size() - 1);
      cyc.pop_back();
      used &= ~(1u << start);
      sizes[t] = size;
    }
  };
  place(place);
}

// level set l(sigma) = i of S_n: union of the classes whose type has n-i parts
template <class Fn>
void for_each_in_level_set(int n, int i, Fn&& fn) {
  if (i < 0 || i > n - 1) throw std::invalid_argument("level must be in 0..n-1");
  for (const auto& type : partitions_with_parts(n, n - i))
    for_each_in_class(type, fn);
}

inline u64 level_set_size(int n, int i) { return stirling_first(n, n - i); }

// splittable work units: one per cycle type, in enumeration order
inline std::vector<std::vector<int>> level_set_chunks(int n, int i) {
  return partitions_with_parts(n, n - i);
}

// all of S_n in lexicographic one-line order (tau sweeps at small n)
template <class Fn>
void for_each_perm(int n, Fn&& fn) {
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    fn(Perm::from_one_line(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace permcount
