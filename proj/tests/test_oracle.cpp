#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "twocore/oracle.hpp"
#include "twocore/serialize.hpp"

namespace twocore::oracle {
namespace {

// (a0, a1, a2, a3) for n = 0..18, from an independent SYT-counting script.
const std::vector<std::array<int, 4>> kCensus{
    {0, 1, 0, 0},   {0, 1, 0, 0},   {0, 2, 0, 0},    {0, 2, 1, 0},    {0, 2, 1, 2},
    {2, 4, 1, 0},   {1, 8, 2, 0},   {1, 4, 6, 4},    {8, 4, 6, 4},    {16, 6, 6, 2},
    {14, 8, 12, 8}, {20, 12, 20, 4}, {29, 16, 16, 16}, {53, 16, 16, 16}, {39, 32, 32, 32},
    {48, 32, 64, 32}, {187, 8, 28, 8}, {253, 10, 28, 6}, {297, 16, 56, 16}};

CensusMod4 frozen(int n) {
  CensusMod4 c;
  c.n = n;
  for (std::size_t r = 0; r < 4; ++r) c.counts[r] = kCensus[static_cast<std::size_t>(n)][r];
  return c;
}

TEST(Census, Examples) {
  EXPECT_EQ(census_mod4(0), frozen(0));
  EXPECT_EQ(census_mod4(4), frozen(4));
  const auto six = census_mod4(6);
  EXPECT_EQ(six.counts[0], 1);
  EXPECT_EQ(six.counts[2], 2);
  EXPECT_EQ(six.odd(), 8);
}

TEST(Census, MatchesFrozenValues) {
  for (int n = 0; n < static_cast<int>(kCensus.size()); ++n) EXPECT_EQ(census_mod4(n), frozen(n)) << n;
}

TEST(Census, LimitGuard) {
  EXPECT_THROW(census_mod4(41), std::out_of_range);
  EXPECT_THROW(census_mod4(-1), std::invalid_argument);
  EXPECT_NO_THROW(census_mod4(5, 1, 5));
  EXPECT_THROW(census_mod4(6, 1, 5), std::out_of_range);
}

TEST(Census, StrataSumToCensus) {
  for (int n = 1; n <= 22; ++n) {
    std::array<std::uint64_t, 4> sum{};
    for (int k = 1; k <= n; ++k) {
      const auto t = census_stratum(n, k);
      for (std::size_t r = 0; r < 4; ++r) sum[r] += t[r];
    }
    const auto c = census_mod4(n);
    for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(BigNat(sum[r]), c.counts[r]) << n;
    EXPECT_EQ(c.total(), partition_count(static_cast<std::uint64_t>(n)));
  }
}

TEST(Census, WorkerCountDoesNotMatter) {
  for (int n : {0, 7, 20, 26}) {
    const auto one = census_mod4(n, 1);
    EXPECT_EQ(census_mod4(n, 3), one);
    EXPECT_EQ(census_mod4(n, 8), one);
  }
}

TEST(VerifyAll, PassesUpToTen) {
  for (int workers : {1, 2, 8}) {
    const auto report = verify_all({.n_max = 10, .workers = workers});
    EXPECT_TRUE(report.all_passed()) << to_text(report);
    EXPECT_EQ(report.checks.size(), check_names().size());
  }
}

TEST(VerifyAll, ZeroRange) {
  const auto report = verify_all({.n_max = 0});
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.n_max, 0);
  for (const auto& c : report.checks) EXPECT_FALSE(c.counterexample.has_value());
}

TEST(VerifyAll, RejectsRangeAboveLimit) {
  EXPECT_THROW(verify_all({.n_max = 41}), std::out_of_range);
  EXPECT_THROW(verify_all({.n_max = 12, .limit = 10}), std::out_of_range);
}

TEST(VerifyAll, InjectedFaultIsIsolated) {
  const auto report = verify_all({.n_max = 8, .workers = 2, .fault = InjectedFault{6, 2}});
  EXPECT_FALSE(report.all_passed());
  const auto* a2_check = report.find("a2_recursion_and_pattern_sum_vs_census");
  ASSERT_NE(a2_check, nullptr);
  EXPECT_FALSE(a2_check->passed);
  ASSERT_TRUE(a2_check->counterexample.has_value());
  EXPECT_EQ(a2_check->counterexample->rfind("n=6:", 0), 0u) << *a2_check->counterexample;

  // Untouched residues and all per-partition checks still pass.
  EXPECT_TRUE(report.find("odd_count_vs_census")->passed);
  for (std::size_t i = 4; i < report.checks.size(); ++i) EXPECT_TRUE(report.checks[i].passed) << report.checks[i].name;
  for (const auto& c : report.checks)
    if (!c.passed) {
      EXPECT_TRUE(c.counterexample.has_value()) << c.name;
    }
}

TEST(VerifyAll, FaultInOddResidueHitsOddCount) {
  const auto report = verify_all({.n_max = 5, .fault = InjectedFault{3, 1}});
  const auto* odd = report.find("odd_count_vs_census");
  EXPECT_FALSE(odd->passed);
  EXPECT_EQ(odd->counterexample->rfind("n=3:", 0), 0u);
  EXPECT_TRUE(report.find("a2_recursion_and_pattern_sum_vs_census")->passed);
}

TEST(VerifyAll, DeterministicAcrossWorkers) {
  const auto base = verify_all({.n_max = 16, .workers = 1});
  const auto text = to_text(base);
  const auto json = report_json(base).dump();
  for (int workers : {2, 8}) {
    const auto other = verify_all({.n_max = 16, .workers = workers});
    EXPECT_EQ(to_text(other), text);
    EXPECT_EQ(report_json(other).dump(), json);
  }
}

TEST(VerifyAll, TextFormatOneLinePerCheck) {
  const auto text = to_text(verify_all({.n_max = 3}));
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')), check_names().size());
  EXPECT_NE(text.find("odd_count_vs_census n=0..3 PASS\n"), std::string::npos);
  EXPECT_NE(to_text(verify_all({.n_max = 3}), true).find(" s)"), std::string::npos);
}

}  // namespace
}  // namespace twocore::oracle
