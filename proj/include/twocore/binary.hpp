#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace twocore {

// bin(n) = {i : b_i = 1} and bin'(n) = bin(n) \ {0}, both in increasing order.
struct BinarySupport {
  std::uint64_t n = 0;
  std::vector<int> bin;
  std::vector<int> bin_prime;
};

inline int binary_digit(std::uint64_t n, int i) {
  return (i >= 0 && i < 64) ? static_cast<int>((n >> i) & 1u) : 0;
}

inline BinarySupport binary_support(std::uint64_t n) {
  BinarySupport s{n, {}, {}};
  for (int i = 0; i < 64; ++i) {
    if (binary_digit(n, i)) {
      s.bin.push_back(i);
      if (i > 0) s.bin_prime.push_back(i);
    }
  }
  return s;
}

inline int nu(std::uint64_t n) { return std::popcount(n); }

// No two adjacent ones in binary.
inline bool is_sparse(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sparseness is defined for positive n only");
  return (n & (n >> 1)) == 0;
}

// Sum of the binary exponents k_1 + ... + k_l.
inline std::uint64_t exponent_sum(std::uint64_t n) {
  std::uint64_t total = 0;
  for (int i = 0; i < 64; ++i)
    if (binary_digit(n, i)) total += static_cast<std::uint64_t>(i);
  return total;
}

}  // namespace twocore
