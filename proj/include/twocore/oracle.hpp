#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bignat.hpp"
#include "binary.hpp"
#include "core_quotient.hpp"
#include "counting.hpp"
#include "partition.hpp"
#include "tower.hpp"

// Brute-force ground truth. The census below touches only hook arithmetic
// from partition.hpp; towers and counting formulas appear only on the other
// side of each comparison.
namespace twocore::oracle {

inline constexpr int kDefaultLimit = 40;
inline constexpr int kDefaultVerifyMax = 25;

struct CensusMod4 {
  int n = 0;
  std::array<BigNat, 4> counts{};  // counts[i] = partitions with f = i (mod 4)

  BigNat total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  BigNat odd() const { return counts[1] + counts[3]; }
  friend bool operator==(const CensusMod4&, const CensusMod4&) = default;
};

// Tally of a single stratum: partitions of n with largest part k (k = 0 only
// for n = 0).
inline std::array<std::uint64_t, 4> census_stratum(int n, int largest_part) {
  std::array<std::uint64_t, 4> tally{};
  for (const auto& lambda : PartitionStream(n, largest_part)) ++tally[static_cast<std::size_t>(dimension_mod4(lambda))];
  return tally;
}

namespace detail {

inline std::vector<int> strata(int n) {
  std::vector<int> keys;
  if (n == 0) keys.push_back(0);
  for (int k = n; k >= 1; --k) keys.push_back(k);  // reverse-lex order of the full stream
  return keys;
}

inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs task(i) for i in [0, count) on up to `workers` threads. Each task
// writes only to its own slot, so results are order-independent.
template <typename Task>
void parallel_for(std::size_t count, int workers, Task&& task) {
  const auto threads = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(resolve_workers(workers)), count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) task(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline void check_limit(int n, int limit) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > limit)
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds the configured limit " + std::to_string(limit));
}

}  // namespace detail

inline CensusMod4 census_mod4(int n, int workers = 1, int limit = kDefaultLimit) {
  detail::check_limit(n, limit);
  const auto keys = detail::strata(n);
  std::vector<std::array<std::uint64_t, 4>> tallies(keys.size());
  detail::parallel_for(keys.size(), workers, [&](std::size_t i) { tallies[i] = census_stratum(n, keys[i]); });
  CensusMod4 c;
  c.n = n;
  for (const auto& t : tallies)
    for (std::size_t r = 0; r < 4; ++r) c.counts[r] += t[r];
  return c;
}

struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<std::string> counterexample;  // first failure, in (n, enumeration) order
  double seconds = 0.0;
};

struct VerificationReport {
  int n_min = 0;
  int n_max = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

// Test hook: pretend one extra partition of n has dimension = residue (mod 4).
struct InjectedFault {
  int n = 0;
  int residue = 2;
};

struct VerifyOptions {
  int n_max = kDefaultVerifyMax;
  int workers = 1;
  int limit = kDefaultLimit;
  std::optional<InjectedFault> fault;
};

// Check names, in report order. The first four compare whole-n counts; the
// rest are evaluated on every partition.
inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "a2_recursion_and_pattern_sum_vs_census",
      "odd_count_vs_census",
      "sparse_closed_form_vs_census",
      "m4_and_div4_vs_census",
      "odd_criterion_via_tower",
      "two_mod4_criterion_via_tower",
      "valuation_identity",
      "core_quotient_roundtrip",
      "core_quotient_size_identity",
      "tower_weighted_size",
      "tower_roundtrip",
  };
  return names;
}

namespace detail {

inline constexpr std::size_t kNumCountChecks = 4;
inline constexpr std::size_t kNumPartitionChecks = 7;

struct StratumOutcome {
  std::array<std::uint64_t, 4> tally{};
  std::array<std::optional<std::string>, kNumPartitionChecks> failure;
  std::array<double, kNumPartitionChecks> seconds{};
};

inline std::string where(const Partition& lambda) {
  return "n=" + std::to_string(lambda.size()) + " lambda=" + to_string(lambda);
}

inline std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline StratumOutcome run_stratum(int n, int largest_part) {
  using Clock = std::chrono::steady_clock;
  StratumOutcome out;
  const auto n_bits = static_cast<std::uint64_t>(n);
  const int bit_sum = nu(n_bits);

  for (const auto& lambda : PartitionStream(n, largest_part)) {
    const int v2 = v2_dimension(lambda);
    ++out.tally[static_cast<std::size_t>(dimension_mod4(lambda))];

    std::size_t idx = 0;
    auto record = [&](auto&& evaluate) {
      const auto start = Clock::now();
      if (!out.failure[idx]) {
        if (auto msg = evaluate()) out.failure[idx] = std::move(msg);
      }
      out.seconds[idx] += std::chrono::duration<double>(Clock::now() - start).count();
      ++idx;
    };

    const CoreTower tower = build_tower(lambda);
    const auto weights = tower.row_weights();

    record([&]() -> std::optional<std::string> {
      if (is_odd_partition_via_tower(lambda) == (v2 == 0)) return std::nullopt;
      return where(lambda) + " v2=" + std::to_string(v2) + " weights=" + join(weights);
    });
    record([&]() -> std::optional<std::string> {
      if (is_two_mod4_via_tower(lambda) == (v2 == 1)) return std::nullopt;
      return where(lambda) + " v2=" + std::to_string(v2) + " weights=" + join(weights);
    });
    record([&]() -> std::optional<std::string> {
      int total = 0;
      for (int w : weights) total += w;
      if (total - bit_sum == v2) return std::nullopt;
      return where(lambda) + " sum(w)-sum(b)=" + std::to_string(total - bit_sum) + " v2=" + std::to_string(v2);
    });

    const Partition core = two_core(lambda);
    const TwoQuotient q = two_quotient(lambda);
    record([&]() -> std::optional<std::string> {
      const Partition back = from_core_and_quotient(core, q);
      if (back == lambda && two_core_by_removal(lambda) == core) return std::nullopt;
      return where(lambda) + " rebuilt=" + to_string(back);
    });
    record([&]() -> std::optional<std::string> {
      const int rhs = 2 * (q.zero.size() + q.one.size()) + core.size();
      if (rhs == n) return std::nullopt;
      return where(lambda) + " 2(|q0|+|q1|)+|core|=" + std::to_string(rhs);
    });
    record([&]() -> std::optional<std::string> {
      long long total = 0;
      for (std::size_t r = 0; r < weights.size(); ++r) total += static_cast<long long>(weights[r]) << r;
      if (total == n) return std::nullopt;
      return where(lambda) + " sum 2^r w_r=" + std::to_string(total);
    });
    record([&]() -> std::optional<std::string> {
      const Partition back = partition_from_tower(tower);
      if (back == lambda) return std::nullopt;
      return where(lambda) + " rebuilt=" + to_string(back);
    });
  }
  return out;
}

// Whole-n checks against the census; returns a message on failure.
inline std::array<std::optional<std::string>, kNumCountChecks> count_checks(const CensusMod4& c) {
  std::array<std::optional<std::string>, kNumCountChecks> out;
  const auto n = static_cast<std::uint64_t>(c.n);
  const std::string at = "n=" + std::to_string(c.n) + ": ";

  const BigNat rec = a2_recursive(n);
  const BigNat direct = a2_direct(n);
  if (!(rec == c.counts[2] && direct == c.counts[2]))
    out[0] = at + "census a2=" + to_decimal(c.counts[2]) + " recursion=" + to_decimal(rec) +
             " pattern sum=" + to_decimal(direct);

  const BigNat odd = count_odd(n);
  if (odd != c.odd()) out[1] = at + "census a1+a3=" + to_decimal(c.odd()) + " formula=" + to_decimal(odd);

  if (n >= 1 && is_sparse(n)) {
    const BigNat closed = a2_sparse(n);
    if (closed != c.counts[2] || closed != rec)
      out[2] = at + "census a2=" + to_decimal(c.counts[2]) + " closed form=" + to_decimal(closed);
  }

  try {
    const BigNat m4_value = m4(n);
    const BigNat div4 = count_div4(n);
    const BigNat not_div4 = c.counts[1] + c.counts[2] + c.counts[3];
    if (m4_value != not_div4 || div4 != c.counts[0])
      out[3] = at + "census a1+a2+a3=" + to_decimal(not_div4) + " a0=" + to_decimal(c.counts[0]) +
               " m4=" + to_decimal(m4_value) + " div4=" + to_decimal(div4);
  } catch (const std::exception& e) {
    out[3] = at + e.what();
  }
  return out;
}

}  // namespace detail

// Runs every check for 0 <= n <= n_max. Failures are recorded in the report,
// never thrown. The report content (timings aside) does not depend on the
// worker count.
inline VerificationReport verify_all(const VerifyOptions& options) {
  using Clock = std::chrono::steady_clock;
  detail::check_limit(options.n_max, options.limit);

  struct Task {
    int n;
    int largest_part;
  };
  std::vector<Task> tasks;
  for (int n = 0; n <= options.n_max; ++n)
    for (int k : detail::strata(n)) tasks.push_back({n, k});

  std::vector<detail::StratumOutcome> outcomes(tasks.size());
  detail::parallel_for(tasks.size(), options.workers,
                       [&](std::size_t i) { outcomes[i] = detail::run_stratum(tasks[i].n, tasks[i].largest_part); });

  const auto& names = check_names();
  VerificationReport report;
  report.n_min = 0;
  report.n_max = options.n_max;
  for (const auto& name : names) report.checks.push_back({name, true, std::nullopt, 0.0});

  auto fail = [&](std::size_t check, std::string msg) {
    auto& c = report.checks[check];
    if (c.passed) {
      c.passed = false;
      c.counterexample = std::move(msg);
    }
  };

  // Ordered reduction: tasks are sorted by n, then by enumeration order.
  std::size_t t = 0;
  for (int n = 0; n <= options.n_max; ++n) {
    CensusMod4 census;
    census.n = n;
    for (; t < tasks.size() && tasks[t].n == n; ++t) {
      const auto& o = outcomes[t];
      for (std::size_t r = 0; r < 4; ++r) census.counts[r] += o.tally[r];
      for (std::size_t p = 0; p < detail::kNumPartitionChecks; ++p) {
        report.checks[detail::kNumCountChecks + p].seconds += o.seconds[p];
        if (o.failure[p]) fail(detail::kNumCountChecks + p, *o.failure[p]);
      }
    }
    if (options.fault && options.fault->n == n) census.counts[static_cast<std::size_t>(options.fault->residue & 3)] += 1;

    const auto start = Clock::now();
    const auto results = detail::count_checks(census);
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    for (std::size_t c = 0; c < detail::kNumCountChecks; ++c) {
      report.checks[c].seconds += elapsed / static_cast<double>(detail::kNumCountChecks);
      if (results[c]) fail(c, *results[c]);
    }
  }
  return report;
}

// One line per check: name, range, PASS/FAIL, counterexample. Timings are
// appended only on request so that the default rendering is reproducible.
inline std::string to_text(const VerificationReport& report, bool with_timings = false) {
  std::ostringstream os;
  const std::string range = "n=" + std::to_string(report.n_min) + ".." + std::to_string(report.n_max);
  for (const auto& c : report.checks) {
    os << c.name << ' ' << range << ' ' << (c.passed ? "PASS" : "FAIL");
    if (c.counterexample) os << " counterexample: " << *c.counterexample;
    if (with_timings) os << " (" << c.seconds << " s)";
    os << '\n';
  }
  return os.str();
}

}  // namespace twocore::oracle
