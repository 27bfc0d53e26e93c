#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "parallel.hpp"
#include "perm.hpp"
#include "report.hpp"

namespace permcount {

// Number of transpositions of S_m.
inline int full_k(int m) { return m * (m - 1) / 2; }

// An ordering s_1, ..., s_K of all transpositions of S_m.  The only property
// the counts below rely on is that the first m-1 entries multiply to an
// m-cycle, i.e. l(s_1 ... s_{m-1}) = m-1; validate() enforces it.
struct TranspositionOrder {
  int degree = 0;
  std::string name;
  std::vector<std::pair<int, int>> pairs;  // 1-based, a < b
};

inline void validate_order(const TranspositionOrder& o) {
  const int m = o.degree;
  if (m < 2 || m > max_degree) throw std::invalid_argument("order degree out of range");
  if (static_cast<int>(o.pairs.size()) != full_k(m))
    throw std::invalid_argument("order must list every transposition exactly once");
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(m) + 1,
                                      std::vector<bool>(static_cast<std::size_t>(m) + 1, false));
  for (auto [a, b] : o.pairs) {
    if (a < 1 || b < 1 || a > m || b > m || a >= b) throw std::invalid_argument("bad pair in order");
    if (seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
      throw std::invalid_argument("duplicate pair in order");
    seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  }
  Perm prefix = Perm::identity(m);
  for (int t = 0; t < m - 1; ++t)
    prefix = compose(prefix, Perm::transposition(m, o.pairs[static_cast<std::size_t>(t)].first,
                                                 o.pairs[static_cast<std::size_t>(t)].second));
  if (reflection_length(prefix) != m - 1)
    throw std::invalid_argument("order prefix s_1..s_{m-1} must be reduced");
}

// (1,2),(1,3),...,(1,m) then the rest lexicographically.
inline TranspositionOrder star_lex_order(int m) {
  TranspositionOrder o;
  o.degree = m;
  o.name = "star-lex";
  for (int b = 2; b <= m; ++b) o.pairs.emplace_back(1, b);
  for (int a = 2; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) o.pairs.emplace_back(a, b);
  validate_order(o);
  return o;
}

// (1,2),(2,3),...,(m-1,m) then the rest lexicographically.
inline TranspositionOrder adjacent_lex_order(int m) {
  TranspositionOrder o;
  o.degree = m;
  o.name = "adjacent-lex";
  for (int a = 1; a < m; ++a) o.pairs.emplace_back(a, a + 1);
  for (int a = 1; a <= m; ++a)
    for (int b = a + 2; b <= m; ++b) o.pairs.emplace_back(a, b);
  validate_order(o);
  return o;
}

inline TranspositionOrder default_order(int m) { return star_lex_order(m); }

// sigma lies in A(k) iff multiplying by any of s_1..s_k raises reflection
// length, i.e. each of the first k pairs straddles two cycles of sigma.
// The criterion is two-sided, so membership does not depend on the product
// convention.
inline bool in_A(const Perm& p, int k, const TranspositionOrder& order) {
  if (k < 0 || k > static_cast<int>(order.pairs.size()))
    throw std::invalid_argument("k out of range for order");
  const auto ids = cycle_ids(p);
  for (int t = 0; t < k; ++t) {
    const auto& [a, b] = order.pairs[static_cast<std::size_t>(t)];
    if (ids[static_cast<std::size_t>(a - 1)] == ids[static_cast<std::size_t>(b - 1)]) return false;
  }
  return true;
}

// Members of A(k), bucketed by reflection length 0..m-1.
inline std::vector<std::vector<Perm>> a_set_by_level(int m, int k, const TranspositionOrder& order) {
  std::vector<std::vector<Perm>> out(static_cast<std::size_t>(m));
  for_each_perm(m, [&](const Perm& p) {
    if (in_A(p, k, order)) out[static_cast<std::size_t>(reflection_length(p))].push_back(p);
  });
  return out;
}

struct FQuery {
  int m = 0;
  int k = 0;
  int i = 0;
  int j = 0;
  Perm tau = Perm(1);
};

inline void check_f_query(const FQuery& q, const TranspositionOrder& order) {
  if (q.m < 2 || q.m > max_degree) throw std::invalid_argument("m out of range");
  if (order.degree != q.m) throw std::invalid_argument("order degree mismatch");
  if (q.k < 0 || q.k > full_k(q.m)) throw std::invalid_argument("k out of range");
  if (q.tau.degree() != q.m) throw std::invalid_argument("tau degree mismatch");
}

// F_k(i,j,tau): pairs (s1,s2) in A(k)^2 at levels (i,j) whose product with
// tau has the full additive length i + j + l(tau).
template <class Mult = right_to_left>
u64 count_F_brute(const FQuery& q, const TranspositionOrder& order, int workers = 1) {
  check_f_query(q, order);
  if (q.i < 0 || q.j < 0 || q.i >= q.m || q.j >= q.m) return 0;
  const int target = q.i + q.j + reflection_length(q.tau);
  if (target > q.m - 1) return 0;
  const auto buckets = a_set_by_level(q.m, q.k, order);
  const auto& firsts = buckets[static_cast<std::size_t>(q.i)];
  const auto& seconds = buckets[static_cast<std::size_t>(q.j)];
  return parallel_sum(firsts, workers, [&](const Perm& s1) {
    u64 c = 0;
    for (const Perm& s2 : seconds)
      if (reflection_length(Mult::mul(Mult::mul(s1, s2), q.tau)) == target) ++c;
    return c;
  });
}

// All F_k(i,j,tau) for one (k,tau) in a single sweep; entry [i][j].
template <class Mult = right_to_left>
std::vector<std::vector<u64>> count_F_table(int m, int k, const Perm& tau,
                                            const TranspositionOrder& order) {
  FQuery probe{m, k, 0, 0, tau};
  check_f_query(probe, order);
  const int lt = reflection_length(tau);
  std::vector<std::vector<u64>> table(static_cast<std::size_t>(m),
                                      std::vector<u64>(static_cast<std::size_t>(m), 0));
  const auto buckets = a_set_by_level(m, k, order);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i + j + lt > m - 1) continue;
      u64 c = 0;
      for (const Perm& s1 : buckets[static_cast<std::size_t>(i)])
        for (const Perm& s2 : buckets[static_cast<std::size_t>(j)])
          if (reflection_length(Mult::mul(Mult::mul(s1, s2), tau)) == i + j + lt) ++c;
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
    }
  return table;
}

struct FRecKey {
  std::uint64_t a = 0, b = 0;
  bool operator==(const FRecKey&) const = default;
};

struct FRecKeyHash {
  std::size_t operator()(const FRecKey& k) const {
    std::uint64_t x = k.a * 0x9e3779b97f4a7c15ULL ^ k.b;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return static_cast<std::size_t>(x);
  }
};

// Top-down evaluation of the three-term descent
//   F_k(i,j,tau) = F_{k+1}(i,j,tau) + F_{k+1}(i-1,j,s_{k+1}tau)
//                 + F_{k+1}(i,j-1,s_{k+1}tau),
// grounded at k = K by F_K(i,j,tau) = [i=0][j=0].  This is implemented
// exactly as stated; verify_recursion compares it against count_F_brute and
// surfaces every disagreement.
template <class Mult = right_to_left>
class FRecursion {
 public:
  explicit FRecursion(const TranspositionOrder& order) : order_(&order), kmax_(full_k(order.degree)) {
    validate_order(order);
  }

  u64 eval(int k, int i, int j, const Perm& tau) {
    if (i < 0 || j < 0) return 0;
    if (k == kmax_) return (i == 0 && j == 0) ? 1 : 0;
    FRecKey key{(static_cast<std::uint64_t>(k) << 16) | (static_cast<std::uint64_t>(i) << 8) |
                    static_cast<std::uint64_t>(j),
                tau.pack()};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const auto& [a, b] = order_->pairs[static_cast<std::size_t>(k)];
    const Perm s = Perm::transposition(order_->degree, a, b);
    const Perm st = Mult::mul(s, tau);
    u64 v = checked_add(eval(k + 1, i, j, tau),
                        checked_add(eval(k + 1, i - 1, j, st), eval(k + 1, i, j - 1, st)));
    memo_.emplace(key, v);
    return v;
  }

 private:
  const TranspositionOrder* order_;
  int kmax_;
  std::unordered_map<FRecKey, u64, FRecKeyHash> memo_;
};

template <class Mult = right_to_left>
u64 count_F_recursive(const FQuery& q, const TranspositionOrder& order) {
  check_f_query(q, order);
  FRecursion<Mult> rec(order);
  return rec.eval(q.k, q.i, q.j, q.tau);
}

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string tau_label(const Perm& tau) {
  return tau.is_identity() ? std::string("id") : to_cycle_string(tau);
}

}  // namespace detail

// Monotonicity toward the diagonal: F_k(i,j,tau) <= F_k(i+1,j-1,tau) whenever
// i+1 < j.  Exhaustive over (k,tau,i,j) for m <= 5; for larger m the sweep
// uses k in {0,1,K-1,K} and one tau per cycle type.  For odd m the driver
// also records the strict pair F_0((m-3)/2,(m+1)/2,id) < F_0((m-1)/2,(m-1)/2,id).
template <class Mult = right_to_left>
Check verify_lemma1(int m, const TranspositionOrder& order, int workers = 1) {
  (void)workers;
  const auto t0 = std::chrono::steady_clock::now();
  Check out;
  out.name = "lemma1";
  out.params = "m=" + std::to_string(m) + " order=" + order.name;
  const int K = full_k(m);

  std::vector<int> ks;
  std::vector<Perm> taus;
  if (m <= 5) {
    for (int k = 0; k <= K; ++k) ks.push_back(k);
    for_each_perm(m, [&](const Perm& p) { taus.push_back(p); });
  } else {
    ks = {0, 1, K - 1, K};
    for (const auto& type : all_partitions(m)) taus.push_back(class_representative(type));
  }

  u64 cells = 0, violations = 0;
  for (int k : ks) {
    const auto buckets = a_set_by_level(m, k, order);
    for (const Perm& tau : taus) {
      const int lt = reflection_length(tau);
      std::vector<std::vector<u64>> table(static_cast<std::size_t>(m),
                                          std::vector<u64>(static_cast<std::size_t>(m), 0));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          if (i + j + lt > m - 1) continue;
          u64 c = 0;
          for (const Perm& s1 : buckets[static_cast<std::size_t>(i)])
            for (const Perm& s2 : buckets[static_cast<std::size_t>(j)])
              if (reflection_length(Mult::mul(Mult::mul(s1, s2), tau)) == i + j + lt) ++c;
          table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
        }
      for (int i = 0; i + 1 < m; ++i)
        for (int j = i + 2; j < m; ++j) {
          ++cells;
          const u64 lo = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          const u64 hi = table[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j) - 1];
          if (lo > hi) {
            ++violations;
            if (out.counterexamples.size() < 10) {
              std::ostringstream os;
              os << "k=" << k << " tau=" << detail::tau_label(tau) << " i=" << i << " j=" << j
                 << ": F(i,j)=" << lo << " > F(i+1,j-1)=" << hi;
              out.counterexamples.push_back(os.str());
            }
          }
        }
    }
  }
  out.counts.emplace_back("cells", cells);
  out.counts.emplace_back("violations", violations);

  bool strict_ok = true;
  if (m >= 3 && m % 2 == 1) {
    const int i = (m - 3) / 2, j = (m + 1) / 2;
    const Perm id = Perm::identity(m);
    const u64 lo = count_F_brute<Mult>({m, 0, i, j, id}, order);
    const u64 hi = count_F_brute<Mult>({m, 0, i + 1, j - 1, id}, order);
    std::string a = "F0(" + std::to_string(i) + "," + std::to_string(j) + ",id)";
    std::string b = "F0(" + std::to_string(i + 1) + "," + std::to_string(j - 1) + ",id)";
    out.counts.emplace_back(a, lo);
    out.counts.emplace_back(b, hi);
    strict_ok = lo < hi;
    if (!strict_ok) out.counterexamples.push_back("strict pair not strict: " + a + " >= " + b);
  }

  out.verified = (violations == 0) && strict_ok;
  out.elapsed_ms = detail::ms_since(t0);
  return out;
}

// Compare the three-term descent against brute counts.  Exhaustive over
// (k,tau,i,j) for m <= 5; for m >= 6, 100 pseudorandom queries from a fixed
// seed.  Scan order is k ascending, tau in lexicographic one-line order,
// then (i,j) row-major, so the first counterexample is stable.
template <class Mult = right_to_left>
Check verify_recursion(int m, const TranspositionOrder& order, int workers = 1) {
  (void)workers;
  const auto t0 = std::chrono::steady_clock::now();
  Check out;
  out.name = "recursion";
  out.params = "m=" + std::to_string(m) + " order=" + order.name;
  const int K = full_k(m);
  FRecursion<Mult> rec(order);

  u64 checked = 0, mismatches = 0;
  auto record = [&](int k, const Perm& tau, int i, int j, u64 brute, u64 recur) {
    ++checked;
    if (brute == recur) return;
    ++mismatches;
    if (out.counterexamples.size() < 10) {
      std::ostringstream os;
      os << "k=" << k << " tau=" << detail::tau_label(tau) << " i=" << i << " j=" << j
         << ": brute=" << brute << " recursive=" << recur;
      out.counterexamples.push_back(os.str());
    }
  };

  if (m <= 5) {
    for (int k = 0; k <= K; ++k) {
      const auto buckets = a_set_by_level(m, k, order);
      for_each_perm(m, [&](const Perm& tau) {
        const int lt = reflection_length(tau);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            u64 brute = 0;
            if (i + j + lt <= m - 1) {
              for (const Perm& s1 : buckets[static_cast<std::size_t>(i)])
                for (const Perm& s2 : buckets[static_cast<std::size_t>(j)])
                  if (reflection_length(Mult::mul(Mult::mul(s1, s2), tau)) == i + j + lt) ++brute;
            }
            record(k, tau, i, j, brute, rec.eval(k, i, j, tau));
          }
      });
    }
  } else {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<int> kdist(0, K), ldist(0, m - 1);
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int t = 0; t < 100; ++t) {
      const int k = kdist(rng), i = ldist(rng), j = ldist(rng);
      for (int x = 0; x < m; ++x) img[static_cast<std::size_t>(x)] = x + 1;
      for (int x = m - 1; x > 0; --x) {
        std::uniform_int_distribution<int> pick(0, x);
        std::swap(img[static_cast<std::size_t>(x)], img[static_cast<std::size_t>(pick(rng))]);
      }
      const Perm tau = Perm::from_one_line(img);
      const u64 brute = count_F_brute<Mult>({m, k, i, j, tau}, order, workers);
      record(k, tau, i, j, brute, rec.eval(k, i, j, tau));
    }
  }

  out.counts.emplace_back("checked", checked);
  out.counts.emplace_back("mismatches", mismatches);
  out.verified = mismatches == 0;
  out.elapsed_ms = detail::ms_since(t0);
  return out;
}

}  // namespace permcount
