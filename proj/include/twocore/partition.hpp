#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bignat.hpp"

namespace twocore {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Weakly decreasing sequence of positive integers. The empty sequence is the
// unique partition of 0.
class Partition {
 public:
  using Part = int;

  Partition() = default;
  Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}
  explicit Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  // Drops trailing zeros; the remaining prefix must already be a partition.
  static Partition from_row_lengths(std::vector<Part> rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(std::move(rows));
  }

  const std::vector<Part>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // 1-based row length; 0 outside the diagram.
  Part row(std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }

  Partition conjugate() const {
    std::vector<Part> cols(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (Part p : parts_)
      for (Part j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Part> parts_;
};

// 1-based (row, column) position in the Ferrers diagram.
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
};

inline bool contains(const Partition& lambda, Cell c) noexcept {
  return c.row >= 1 && c.col >= 1 && static_cast<std::size_t>(c.row) <= lambda.length() &&
         c.col <= lambda.row(static_cast<std::size_t>(c.row));
}

// "4,3,3,1"; the empty partition renders as "-".
inline std::string to_string(const Partition& lambda) {
  if (lambda.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda.parts()[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& lambda) {
  return os << '(' << to_string(lambda) << ')';
}

namespace detail {
inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}
}  // namespace detail

// Comma-separated positive integers, or "" / "-" for the empty partition.
inline Partition parse_partition(std::string_view text) {
  text = detail::trim(text);
  if (text.empty() || text == "-") return {};
  std::vector<Partition::Part> parts;
  while (true) {
    const auto comma = text.find(',');
    const auto token = detail::trim(text.substr(0, comma));
    Partition::Part value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("not a positive integer: '" + std::string(token) + "'");
    if (value < 1) throw ParseError("parts must be positive: '" + std::string(token) + "'");
    if (!parts.empty() && value > parts.back())
      throw ParseError("parts must be weakly decreasing: " + std::to_string(parts.back()) + " < " +
                       std::to_string(value));
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

// Arm + leg + 1.
inline int hook_length(const Partition& lambda, Cell c) {
  if (!contains(lambda, c)) throw std::out_of_range("cell outside the diagram");
  int leg = 0;
  for (std::size_t i = static_cast<std::size_t>(c.row) + 1; lambda.row(i) >= c.col; ++i) ++leg;
  const int arm = lambda.row(static_cast<std::size_t>(c.row)) - c.col;
  return arm + leg + 1;
}

// All hook lengths, row by row.
inline std::vector<int> hook_lengths(const Partition& lambda) {
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  const Partition conj = lambda.conjugate();
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j)
      hooks.push_back((lambda.row(i) - j) + (conj.row(static_cast<std::size_t>(j)) - static_cast<int>(i)) + 1);
  return hooks;
}

inline BigNat factorial(int n) {
  BigNat result = 1;
  for (int i = 2; i <= n; ++i) result *= static_cast<unsigned>(i);
  return result;
}

// Number of standard Young tableaux, by the hook-length formula. Every
// sub-product of the hooks divides n!, so each division below is exact.
inline BigNat dimension(const Partition& lambda) {
  BigNat result = factorial(lambda.size());
  for (int h : hook_lengths(lambda)) {
    if (result % static_cast<unsigned>(h) != 0)
      throw std::logic_error("hook product does not divide n!");
    result /= static_cast<unsigned>(h);
  }
  return result;
}

inline constexpr int kBruteForceSytLimit = 12;

// Counts SYT by placing 1..n one at a time on an outer corner of the growing
// shape. Exponential; only for cross-checking dimension().
inline BigNat count_syt_bruteforce(const Partition& lambda) {
  if (lambda.size() > kBruteForceSytLimit)
    throw std::invalid_argument("partition too large for brute-force SYT count (size > " +
                                std::to_string(kBruteForceSytLimit) + ")");
  const auto& target = lambda.parts();
  std::vector<int> filled(target.size(), 0);
  std::uint64_t count = 0;
  auto place = [&](auto& self, int remaining) -> void {
    if (remaining == 0) {
      ++count;
      return;
    }
    for (std::size_t i = 0; i < target.size(); ++i) {
      const bool room = filled[i] < target[i];
      const bool above_ok = i == 0 || filled[i - 1] > filled[i];
      if (room && above_ok) {
        ++filled[i];
        self(self, remaining - 1);
        --filled[i];
      }
    }
  };
  place(place, lambda.size());
  return BigNat(count);
}

// Legendre: v2(n!) = n - popcount(n).
inline int v2_factorial(int n) {
  return n - std::popcount(static_cast<unsigned>(n));
}

inline int v2_dimension(const Partition& lambda) {
  int v = v2_factorial(lambda.size());
  for (int h : hook_lengths(lambda)) v -= std::countr_zero(static_cast<unsigned>(h));
  return v;
}

// f mod 4 without big integers: with v = v2(f), f = 2^v * u and
//   u = (odd parts of 1..n) / (odd parts of hooks).
// Odd numbers are their own inverses mod 4, so u mod 4 is a product of odd
// parts mod 4.
inline int dimension_mod4(const Partition& lambda) {
  const auto hooks = hook_lengths(lambda);
  int v = v2_factorial(lambda.size());
  for (int h : hooks) v -= std::countr_zero(static_cast<unsigned>(h));
  if (v >= 2) return 0;
  if (v == 1) return 2;
  unsigned u = 1;
  const auto odd_part = [](unsigned x) { return x >> std::countr_zero(x); };
  for (int i = 2; i <= lambda.size(); ++i) u = (u * odd_part(static_cast<unsigned>(i))) & 3u;
  for (int h : hooks) u = (u * odd_part(static_cast<unsigned>(h))) & 3u;
  return static_cast<int>(u);
}

// Lazily yields partitions of n in reverse-lexicographic order:
// (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1,...,1).
// With fixed_largest_part = k only partitions whose largest part is k are
// produced, in the same relative order.
class PartitionStream {
 public:
  explicit PartitionStream(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    current_ = n == 0 ? std::vector<int>{} : std::vector<int>{n};
  }

  PartitionStream(int n, int fixed_largest_part) : fixed_(true) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    const int k = fixed_largest_part;
    if ((n == 0 && k != 0) || (n > 0 && (k < 1 || k > n))) {
      done_ = true;
      return;
    }
    if (n == 0) return;
    current_ = {k};
    fill_greedy(n - k, k);
  }

  // Returns the next partition, or nullopt when exhausted.
  std::optional<Partition> next() {
    if (done_) return std::nullopt;
    Partition out{std::vector<int>(current_)};
    advance();
    return out;
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(PartitionStream* stream) : stream_(stream) { ++*this; }
    const Partition& operator*() const { return *value_; }
    const Partition* operator->() const { return &*value_; }
    iterator& operator++() {
      value_ = stream_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return !value_.has_value(); }

   private:
    PartitionStream* stream_ = nullptr;
    std::optional<Partition> value_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  void fill_greedy(int remaining, int max_part) {
    while (remaining > 0) {
      const int p = std::min(remaining, max_part);
      current_.push_back(p);
      remaining -= p;
    }
  }

  void advance() {
    // Rightmost part greater than 1.
    std::size_t idx = current_.size();
    while (idx > 0 && current_[idx - 1] == 1) --idx;
    if (idx == 0 || (fixed_ && idx == 1)) {
      done_ = true;
      return;
    }
    --idx;
    const int ones = static_cast<int>(current_.size() - idx - 1);
    const int smaller = current_[idx] - 1;
    current_.resize(idx);
    current_.push_back(smaller);
    fill_greedy(ones + 1, smaller);
  }

  bool fixed_ = false;
  bool done_ = false;
  std::vector<int> current_;
};

inline PartitionStream enumerate_partitions(int n) { return PartitionStream(n); }

inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  for (const auto& p : PartitionStream(n)) out.push_back(p);
  return out;
}

}  // namespace twocore
