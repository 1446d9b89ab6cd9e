#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace twocore {

enum class Orientation { horizontal, vertical };

// A removable domino, identified by its top-left cell.
struct DominoPosition {
  Cell anchor;
  Orientation orientation = Orientation::horizontal;
  friend bool operator==(const DominoPosition&, const DominoPosition&) = default;
};

struct TwoQuotient {
  Partition zero;  // lambda^(0)
  Partition one;   // lambda^(1)
  friend bool operator==(const TwoQuotient&, const TwoQuotient&) = default;
};

// Staircase test: parts are k, k-1, ..., 1.
inline bool is_two_core(const Partition& lambda) {
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(p.size() - i)) return false;
  return true;
}

inline Partition staircase(int k) {
  std::vector<int> parts;
  for (int r = k; r >= 1; --r) parts.push_back(r);
  return Partition(std::move(parts));
}

// Horizontal dominoes sit at the end of a row that exceeds the next by at
// least 2; vertical dominoes sit at the bottom of a run of equal rows.
inline std::vector<DominoPosition> removable_dominoes(const Partition& lambda) {
  std::vector<DominoPosition> out;
  const std::size_t len = lambda.length();
  for (std::size_t i = 1; i <= len; ++i) {
    const int r = lambda.row(i);
    if (r - lambda.row(i + 1) >= 2)
      out.push_back({{static_cast<int>(i), r - 1}, Orientation::horizontal});
    if (i + 1 <= len && lambda.row(i + 1) == r && lambda.row(i + 2) < r)
      out.push_back({{static_cast<int>(i), r}, Orientation::vertical});
  }
  return out;
}

inline bool is_two_core_by_dominoes(const Partition& lambda) {
  return removable_dominoes(lambda).empty();
}

inline Partition remove_domino(const Partition& lambda, const DominoPosition& d) {
  std::vector<int> rows = lambda.parts();
  const auto i = static_cast<std::size_t>(d.anchor.row - 1);
  if (d.orientation == Orientation::horizontal) {
    rows.at(i) -= 2;
  } else {
    rows.at(i) -= 1;
    rows.at(i + 1) -= 1;
  }
  return Partition::from_row_lengths(std::move(rows));
}

// Greedy domino removal. The chooser picks an index into the list of
// currently removable dominoes; the result does not depend on its choices.
template <typename Chooser>
Partition two_core_by_removal(Partition lambda, Chooser&& choose) {
  for (auto dominoes = removable_dominoes(lambda); !dominoes.empty();
       dominoes = removable_dominoes(lambda)) {
    const std::size_t pick = static_cast<std::size_t>(choose(dominoes.size())) % dominoes.size();
    lambda = remove_domino(lambda, dominoes[pick]);
  }
  return lambda;
}

inline Partition two_core_by_removal(const Partition& lambda) {
  return two_core_by_removal(lambda, [](std::size_t) { return 0; });
}

// Beta-sets on a two-runner abacus. A partition with at most N parts is
// encoded by the N first-column hook lengths beta_i = lambda_i + N - i
// (1-based i). N is always even here, so shifting N by 2 shifts both runners
// by one position and leaves the decoded core and quotient unchanged.
namespace abacus {

inline std::vector<int> beta_set(const Partition& lambda, int beads) {
  if (beads < static_cast<int>(lambda.length()))
    throw std::invalid_argument("beta-set needs at least as many beads as parts");
  std::vector<int> beta;
  beta.reserve(static_cast<std::size_t>(beads));
  for (int i = 1; i <= beads; ++i) beta.push_back(lambda.row(static_cast<std::size_t>(i)) + beads - i);
  return beta;  // strictly decreasing
}

inline Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int beads = static_cast<int>(beta.size());
  std::vector<int> rows;
  for (int i = 1; i <= beads; ++i) rows.push_back(beta[static_cast<std::size_t>(i - 1)] - beads + i);
  return Partition::from_row_lengths(std::move(rows));
}

inline int even_bead_count(const Partition& lambda) {
  const int len = static_cast<int>(lambda.length());
  return len + (len % 2);
}

struct Runners {
  std::array<std::vector<int>, 2> positions;  // bead positions, decreasing
};

inline Runners split(const std::vector<int>& beta) {
  Runners r;
  for (int b : beta) r.positions[static_cast<std::size_t>(b % 2)].push_back(b / 2);
  return r;
}

// Core: slide every bead on each runner as far up as it goes.
inline Partition core(const Partition& lambda) {
  const auto runners = split(beta_set(lambda, even_bead_count(lambda)));
  std::vector<int> beta;
  for (int r = 0; r < 2; ++r) {
    const auto count = static_cast<int>(runners.positions[static_cast<std::size_t>(r)].size());
    for (int k = 0; k < count; ++k) beta.push_back(2 * k + r);
  }
  return from_beta_set(std::move(beta));
}

// Quotient read off the runners. Runner r yields lambda^(r) under the
// cell-labeling rule when the bead count is even.
inline TwoQuotient quotient(const Partition& lambda) {
  const auto runners = split(beta_set(lambda, even_bead_count(lambda)));
  return {from_beta_set(runners.positions[0]), from_beta_set(runners.positions[1])};
}

}  // namespace abacus

inline Partition two_core(const Partition& lambda) { return abacus::core(lambda); }

// Label cell (i,j) with (i+j) mod 2. lambda^(0) collects the cells whose row
// ends in a 0 and whose column ends in a 1; lambda^(1) the reverse. Selecting
// a set of rows and a set of columns from a Young diagram leaves a Young
// diagram, so each selection is itself a partition.
inline TwoQuotient two_quotient(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  const auto row_end = [&](std::size_t i) { return (static_cast<int>(i) + lambda.row(i)) % 2; };
  const auto col_end = [&](int j) { return (j + conj.row(static_cast<std::size_t>(j))) % 2; };

  std::array<std::vector<int>, 2> rows;
  for (std::size_t i = 1; i <= lambda.length(); ++i) {
    const int label = row_end(i);
    int selected = 0;
    for (int j = 1; j <= lambda.row(i); ++j)
      if (col_end(j) != label) ++selected;
    if (selected > 0) rows[static_cast<std::size_t>(label)].push_back(selected);
  }
  return {Partition(std::move(rows[0])), Partition(std::move(rows[1]))};
}

// Inverse of (two_core, two_quotient): place the quotient parts on the runners
// with the bead counts the core dictates, then read the beta-set back.
inline Partition from_core_and_quotient(const Partition& core, const Partition& q0,
                                        const Partition& q1) {
  if (!is_two_core(core)) throw std::invalid_argument("core argument is not a 2-core: " + to_string(core));
  const auto longest = static_cast<int>(std::max(q0.length(), q1.length()));
  const int beads = 2 * (static_cast<int>(core.length()) + longest + 1);
  const auto core_runners = abacus::split(abacus::beta_set(core, beads));

  std::vector<int> beta;
  const std::array<const Partition*, 2> quotient{&q0, &q1};
  for (std::size_t r = 0; r < 2; ++r) {
    const auto count = static_cast<int>(core_runners.positions[r].size());
    for (int pos : abacus::beta_set(*quotient[r], count)) beta.push_back(2 * pos + static_cast<int>(r));
  }
  return abacus::from_beta_set(std::move(beta));
}

inline Partition from_core_and_quotient(const Partition& core, const TwoQuotient& q) {
  return from_core_and_quotient(core, q.zero, q.one);
}

}  // namespace twocore
