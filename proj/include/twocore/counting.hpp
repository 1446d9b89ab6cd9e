#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bignat.hpp"
#include "binary.hpp"

namespace twocore {

// a(n) = m_2(n): partitions of n with odd dimension, 2^(k_1 + ... + k_l).
// a(0) = 1.
inline BigNat count_odd(std::uint64_t n) { return pow2(exponent_sum(n)); }

namespace detail {
// C(N, r) for small r.
inline BigNat small_binomial(const BigNat& top, unsigned r) {
  if (top < r) return 0;
  BigNat num = 1;
  for (unsigned i = 0; i < r; ++i) num *= top - i;
  BigNat den = 1;
  for (unsigned i = 2; i <= r; ++i) den *= i;
  return num / den;
}
}  // namespace detail

// Number of 2^k-tuples of 2-cores with total size w, for 0 <= w <= 3.
inline BigNat t_count(int k, int w) {
  if (k < 0) throw std::invalid_argument("t_count: negative row index");
  const BigNat slots = pow2(static_cast<std::uint64_t>(k));
  switch (w) {
    case 0:
      return 1;
    case 1:
      return slots;
    case 2:
      return detail::small_binomial(slots, 2);
    case 3:
      return detail::small_binomial(slots, 3) + slots;
    default:
      throw std::invalid_argument("t_count: weight must be in 0..3, got " + std::to_string(w));
  }
}

// Row weights prescribed for towers with v2(f) = 1 and distinguished row k:
// entries[k-1] = b_{k-1} + 2, entries[k] = 0, entries[i] = b_i otherwise.
struct WeightPattern {
  std::uint64_t n = 0;
  int k = 0;
  std::vector<int> entries;  // trailing entries beyond the top bit are 0

  int at(int i) const {
    return (i >= 0 && static_cast<std::size_t>(i) < entries.size()) ? entries[static_cast<std::size_t>(i)] : 0;
  }
  friend bool operator==(const WeightPattern&, const WeightPattern&) = default;
};

inline WeightPattern weight_pattern(std::uint64_t n, int k) {
  if (k < 1 || k > 63 || !binary_digit(n, k))
    throw std::invalid_argument("weight_pattern: " + std::to_string(k) + " is not in bin'(" +
                                std::to_string(n) + ")");
  WeightPattern p{n, k, {}};
  const int top = 63 - std::countl_zero(n);
  for (int i = 0; i <= top; ++i) p.entries.push_back(binary_digit(n, i));
  p.entries[static_cast<std::size_t>(k - 1)] += 2;
  p.entries[static_cast<std::size_t>(k)] = 0;
  return p;
}

inline BigNat pattern_count(const WeightPattern& p) {
  BigNat product = 1;
  for (std::size_t i = 0; i < p.entries.size(); ++i) product *= t_count(static_cast<int>(i), p.entries[i]);
  return product;
}

// a_2(n) as the sum over the admissible distinguished rows.
inline BigNat a2_direct(std::uint64_t n) {
  BigNat total = 0;
  for (int k : binary_support(n).bin_prime) total += pattern_count(weight_pattern(n, k));
  return total;
}

// a_2(n) by peeling off the top bit, n = 2^R + m with m < 2^R. The second
// case applies when b_{R-1} = 1.
inline BigNat a2_recursive(std::uint64_t n) {
  if (n <= 1) return 0;
  const int top = 63 - std::countl_zero(n);
  const std::uint64_t m = n - (std::uint64_t{1} << top);
  const BigNat half = pow2(static_cast<std::uint64_t>(top - 1));
  BigNat result = pow2(static_cast<std::uint64_t>(top)) * a2_recursive(m);
  const BigNat odd_m = count_odd(m);
  if (!binary_digit(n, top - 1)) {
    result += detail::small_binomial(half, 2) * odd_m;
  } else {
    if (odd_m % half != 0)
      throw std::logic_error("a2: 2^(R-1) does not divide a(m) for n = " + std::to_string(n));
    result += (detail::small_binomial(half, 3) + half) * (odd_m / half);
  }
  return result;
}

// Partitions of n whose dimension is 2 mod 4. Both routes are evaluated and
// must agree.
inline BigNat a2(std::uint64_t n) {
  BigNat value = a2_recursive(n);
  if (value != a2_direct(n)) throw std::logic_error("a2: recursion and pattern sum disagree at n = " + std::to_string(n));
  return value;
}

// Closed form for sparse n.
inline BigNat a2_sparse(std::uint64_t n) {
  if (!is_sparse(n)) throw std::invalid_argument("a2_sparse: " + std::to_string(n) + " is not sparse");
  const std::uint64_t even = n & ~std::uint64_t{1};
  const BigNat weighted = count_odd(even) * (even - 2 * static_cast<std::uint64_t>(nu(even)));
  if (weighted % 8 != 0) throw std::logic_error("a2_sparse: a(n)(n - 2 nu(n)) not divisible by 8");
  return weighted / 8;
}

// Euler's pentagonal-number recurrence, O(n^1.5) big-integer additions.
inline BigNat partition_count(std::uint64_t n) {
  std::vector<BigNat> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    BigNat sum = 0;
    for (std::uint64_t j = 1;; ++j) {
      const std::uint64_t g1 = j * (3 * j - 1) / 2;
      if (g1 > k) break;
      const std::uint64_t g2 = j * (3 * j + 1) / 2;
      BigNat term = p[k - g1];
      if (g2 <= k) term += p[k - g2];
      if (j % 2) sum += term;
      else sum -= term;
    }
    p[k] = sum;
  }
  return p[n];
}

// m_4(n) = a(n) + a_2(n).
inline BigNat m4(std::uint64_t n) { return count_odd(n) + a2(n); }

// p(n) - a(n) - a_2(n).
inline BigNat count_div4(std::uint64_t n) {
  BigNat value = partition_count(n) - count_odd(n) - a2(n);
  if (value < 0) throw std::logic_error("count_div4: negative count at n = " + std::to_string(n));
  return value;
}

}  // namespace twocore
