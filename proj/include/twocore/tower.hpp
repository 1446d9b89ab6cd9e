#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "binary.hpp"
#include "core_quotient.hpp"
#include "partition.hpp"

namespace twocore {

// 2-core tower. Node b (a binary string, "" for the root) is labeled with
// core_2(lambda^(b)), where lambda^(b0), lambda^(b1) form the 2-quotient of
// lambda^(b). Only non-empty labels are stored; every other node of rows
// 0..depth-1 carries the empty label.
class CoreTower {
 public:
  CoreTower() = default;

  int n() const noexcept { return n_; }

  // Smallest d such that lambda^(b) is empty for every |b| = d.
  int depth() const noexcept { return depth_; }

  const std::map<std::string, Partition>& nonempty_labels() const noexcept { return labels_; }

  Partition label(const std::string& node) const {
    const auto it = labels_.find(node);
    return it == labels_.end() ? Partition{} : it->second;
  }

  // Node names of row r, left to right: children of b are b0 then b1.
  static std::vector<std::string> row_nodes(int r) {
    std::vector<std::string> names;
    const std::uint64_t count = std::uint64_t{1} << r;
    names.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
      std::string s(static_cast<std::size_t>(r), '0');
      for (int bit = 0; bit < r; ++bit)
        if ((k >> (r - 1 - bit)) & 1u) s[static_cast<std::size_t>(bit)] = '1';
      names.push_back(std::move(s));
    }
    return names;
  }

  // w_r = total size of the labels in row r, for 0 <= r < depth. The last
  // entry is always positive.
  std::vector<int> row_weights() const {
    std::vector<int> w(static_cast<std::size_t>(depth_), 0);
    for (const auto& [node, core] : labels_) w[node.size()] += core.size();
    return w;
  }

  friend CoreTower build_tower(const Partition& lambda);
  friend bool operator==(const CoreTower&, const CoreTower&) = default;

 private:
  void visit(const Partition& lambda, const std::string& node) {
    if (lambda.empty()) return;
    depth_ = std::max(depth_, static_cast<int>(node.size()) + 1);
    Partition core = two_core(lambda);
    if (!core.empty()) labels_.emplace(node, std::move(core));
    const TwoQuotient q = two_quotient(lambda);
    visit(q.zero, node + '0');
    visit(q.one, node + '1');
  }

  int n_ = 0;
  int depth_ = 0;
  std::map<std::string, Partition> labels_;
};

inline CoreTower build_tower(const Partition& lambda) {
  CoreTower t;
  t.n_ = lambda.size();
  t.visit(lambda, "");
  return t;
}

inline std::vector<int> row_weights(const CoreTower& t) { return t.row_weights(); }

// Rebuilds the partition bottom-up through from_core_and_quotient.
inline Partition partition_from_tower(const CoreTower& t) {
  auto rebuild = [&](auto& self, const std::string& node) -> Partition {
    if (static_cast<int>(node.size()) >= t.depth()) return {};
    return from_core_and_quotient(t.label(node), self(self, node + '0'), self(self, node + '1'));
  };
  return rebuild(rebuild, "");
}

namespace detail {
inline int weight_at(const std::vector<int>& w, int i) {
  return (i >= 0 && static_cast<std::size_t>(i) < w.size()) ? w[static_cast<std::size_t>(i)] : 0;
}

// Rows that need checking against the binary digits of n.
inline int row_span(const std::vector<int>& w, std::uint64_t n) {
  return std::max(static_cast<int>(w.size()), 64 - std::countl_zero(n));
}
}  // namespace detail

// Odd dimension iff w_i = b_i for every i.
inline bool is_odd_partition_via_tower(const Partition& lambda) {
  const auto n = static_cast<std::uint64_t>(lambda.size());
  const auto w = build_tower(lambda).row_weights();
  for (int i = 0; i < detail::row_span(w, n); ++i)
    if (detail::weight_at(w, i) != binary_digit(n, i)) return false;
  return true;
}

// v2(f) = 1 iff for some R in bin'(n): w_{R-1} = b_{R-1} + 2, w_R = 0 and
// w_i = b_i elsewhere.
inline bool is_two_mod4_via_tower(const Partition& lambda) {
  const auto n = static_cast<std::uint64_t>(lambda.size());
  const auto w = build_tower(lambda).row_weights();
  const int span = detail::row_span(w, n);
  for (int r : binary_support(n).bin_prime) {
    bool match = true;
    for (int i = 0; i < span && match; ++i) {
      int expected = binary_digit(n, i);
      if (i == r - 1) expected += 2;
      if (i == r) expected = 0;
      match = detail::weight_at(w, i) == expected;
    }
    if (match) return true;
  }
  return false;
}

// Text rendering: one row per line, labels left to right, empty label "-".
inline std::string render_ascii(const CoreTower& t) {
  std::string out;
  for (int r = 0; r < t.depth(); ++r) {
    const auto nodes = CoreTower::row_nodes(r);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (k) out += ' ';
      out += to_string(t.label(nodes[k]));
    }
    out += '\n';
  }
  return out;
}

}  // namespace twocore
