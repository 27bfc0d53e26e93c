#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "filtration.hpp"
#include "products.hpp"
#include "report.hpp"

namespace permcount {

// Closed-form counts against direct enumeration, plus the structural facts
// the other checks lean on.
inline std::vector<Check> verify_oracles(int n_max = 8, int workers = 1) {
  (void)workers;
  if (n_max < 1 || n_max > max_degree) throw std::invalid_argument("n out of range");
  std::vector<Check> out;

  {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    c.name = "oracles-levels";
    c.params = "n<=" + std::to_string(n_max);
    u64 checked = 0;
    bool ok = true;
    for (int n = 1; n <= n_max; ++n) {
      u64 sum = 0;
      for (int k = 1; k <= n; ++k) sum = checked_add(sum, stirling_first(n, k));
      if (sum != factorial(n)) ok = false;
      ++checked;
      if (n <= 8) {
        std::vector<u64> by_level(static_cast<std::size_t>(n), 0);
        for_each_perm(n, [&](const Perm& p) { ++by_level[static_cast<std::size_t>(reflection_length(p))]; });
        for (int i = 0; i < n; ++i) {
          ++checked;
          if (by_level[static_cast<std::size_t>(i)] != level_set_size(n, i)) {
            ok = false;
            c.counterexamples.push_back("level count off at n=" + std::to_string(n) +
                                        " i=" + std::to_string(i));
          }
        }
      }
    }
    c.counts.emplace_back("checked", checked);
    c.verified = ok;
    c.elapsed_ms = detail::ms_since(t0);
    out.push_back(std::move(c));
  }

  {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    c.name = "oracles-classes";
    c.params = "n<=" + std::to_string(n_max);
    u64 checked = 0;
    bool ok = true;
    for (int n = 1; n <= n_max; ++n) {
      u64 total = 0;
      for (const auto& type : all_partitions(n)) {
        const u64 size = class_size(type);
        total = checked_add(total, size);
        if (cycle_type(class_representative(type)) != type) {
          ok = false;
          c.counterexamples.push_back("representative has wrong type at n=" + std::to_string(n));
        }
        u64 streamed = 0;
        for_each_in_class(type, [&](const Perm& p) {
          ++streamed;
          if (cycle_type(p) != type) ok = false;
        });
        if (streamed != size) {
          ok = false;
          c.counterexamples.push_back("class stream count off at n=" + std::to_string(n));
        }
        ++checked;
      }
      if (total != factorial(n)) ok = false;
    }
    c.counts.emplace_back("classes", checked);
    c.verified = ok;
    c.elapsed_ms = detail::ms_since(t0);
    out.push_back(std::move(c));
  }

  {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    c.name = "oracles-filtration";
    c.params = "m=3..6";
    bool ok = true;
    for (int m = 3; m <= 6 && m <= n_max; ++m) {
      const auto order = default_order(m);
      const int K = full_k(m);
      u64 members = 0;
      bool id_in = false;
      for_each_perm(m, [&](const Perm& p) {
        bool prev = true;
        for (int k = 0; k <= K; ++k) {
          const bool now = in_A(p, k, order);
          if (now && !prev) ok = false;  // A(k) must shrink with k
          prev = now;
        }
        if (in_A(p, K, order)) {
          ++members;
          if (p.is_identity()) id_in = true;
        }
      });
      if (members != 1 || !id_in) {
        ok = false;
        c.counterexamples.push_back("A(K) != {id} at m=" + std::to_string(m));
      }
    }
    c.verified = ok;
    c.counts.emplace_back("checked", static_cast<u64>(std::max(0, std::min(6, n_max) - 2)));
    c.elapsed_ms = detail::ms_since(t0);
    out.push_back(std::move(c));
  }

  {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    c.name = "oracles-narayana";
    c.params = "m<=" + std::to_string(n_max);
    u64 checked = 0;
    bool ok = true;
    for (int m = 2; m <= n_max; ++m)
      for (int i = 0; i < m; ++i) {
        const int j = m - 1 - i;
        const u64 got = count_factorizations_of_cycle(m, i, j);
        if (got != narayana(m, i + 1)) {
          ok = false;
          c.counterexamples.push_back("m=" + std::to_string(m) + " i=" + std::to_string(i) +
                                      ": count=" + std::to_string(got));
        }
        ++checked;
      }
    c.counts.emplace_back("checked", checked);
    c.verified = ok;
    c.elapsed_ms = detail::ms_since(t0);
    out.push_back(std::move(c));
  }

  return out;
}

// The whole battery: oracles once, then per g the product inequality, the
// covering identity, the diagonal difference, and the filtration checks at
// m = 2g-3.  A positive time budget skips whatever it cannot reach; degrees
// past the packed-permutation cap are skipped with a reason.  Exit semantics
// live on Report::exit_code().
inline Report verify_all(int g_max, int workers = 1, double budget_seconds = 0.0) {
  if (g_max < 3) throw std::invalid_argument("g-max must be at least 3");
  const auto t0 = std::chrono::steady_clock::now();
  const bool has_budget = budget_seconds > 0.0;
  const auto deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                 std::chrono::duration<double>(budget_seconds));
  Report rep;
  rep.command = "verify all";
  rep.query["g_max"] = g_max;
  rep.order_name = "star-lex";

  auto expired = [&] { return has_budget && std::chrono::steady_clock::now() >= deadline; };
  auto skip = [&](const std::string& name, const std::string& params, const std::string& why) {
    Check c;
    c.name = name;
    c.params = params;
    c.skipped = why;
    rep.checks.push_back(std::move(c));
  };

  if (expired()) {
    skip("oracles", "n<=8", "time budget exhausted");
  } else {
    for (Check& c : verify_oracles(8, workers)) rep.checks.push_back(std::move(c));
  }

  for (int g = 3; g <= g_max; ++g) {
    const std::string gs = "g=" + std::to_string(g);
    const int m = 2 * g - 3;
    const std::string ms = "m=" + std::to_string(m);
    if (2 * g - 2 > max_degree) {
      const std::string why = "degree 2g-2 exceeds " + std::to_string(max_degree);
      skip("lemma2", gs, why);
      skip("covering", gs, why);
      skip("diag-coeff", gs, why);
      skip("recursion", ms, why);
      skip("lemma1", ms, why);
      continue;
    }

    if (expired()) skip("lemma2", gs, "time budget exhausted");
    else for (Check& c : verify_lemma2(g, workers)) rep.checks.push_back(std::move(c));

    if (expired()) skip("covering", gs, "time budget exhausted");
    else rep.checks.push_back(verify_covering(g, workers));

    if (expired()) skip("diag-coeff", gs, "time budget exhausted");
    else rep.checks.push_back(diag_coefficient(g, g <= 4 ? "both" : "reduced", workers));

    const auto order = default_order(m);
    if (expired()) skip("recursion", ms, "time budget exhausted");
    else rep.checks.push_back(verify_recursion(m, order, workers));

    if (expired()) skip("lemma1", ms, "time budget exhausted");
    else rep.checks.push_back(verify_lemma1(m, order, workers));
  }

  rep.elapsed_ms = detail::ms_since(t0);
  return rep;
}

}  // namespace permcount
