#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "generators.hpp"
#include "twocore/counting.hpp"
#include "twocore/tower.hpp"

namespace twocore {
namespace {

using testing::for_all_partitions;

std::vector<std::string> row_labels(const CoreTower& t, int r) {
  std::vector<std::string> out;
  for (const auto& node : CoreTower::row_nodes(r)) out.push_back(to_string(t.label(node)));
  return out;
}

TEST(BuildTower, WorkedExample) {
  const CoreTower t = build_tower({6, 5, 4, 2, 1, 1});
  EXPECT_EQ(t.n(), 19);
  EXPECT_EQ(t.depth(), 4);
  EXPECT_EQ(row_labels(t, 0), (std::vector<std::string>{"2,1"}));
  EXPECT_EQ(row_labels(t, 1), (std::vector<std::string>{"-", "-"}));
  EXPECT_EQ(row_labels(t, 2), (std::vector<std::string>{"1", "-", "1", "-"}));
  EXPECT_EQ(row_labels(t, 3), (std::vector<std::string>{"-", "-", "-", "-", "-", "-", "1", "-"}));
  EXPECT_EQ(t.label("110"), Partition{1});
  EXPECT_EQ(t.row_weights(), (std::vector<int>{3, 0, 2, 1}));
  EXPECT_EQ(render_ascii(t), "2,1\n- -\n1 - 1 -\n- - - - - - 1 -\n");
}

TEST(BuildTower, EmptyAndSingleCell) {
  const CoreTower empty = build_tower({});
  EXPECT_EQ(empty.depth(), 0);
  EXPECT_TRUE(empty.row_weights().empty());
  EXPECT_EQ(render_ascii(empty), "");

  const CoreTower one = build_tower({1});
  EXPECT_EQ(one.depth(), 1);
  EXPECT_EQ(one.label(""), Partition{1});
  EXPECT_EQ(one.label("0"), Partition{});
  EXPECT_EQ(row_weights(one), std::vector<int>{1});
}

TEST(RowNodes, ChildrenFollowParents) {
  EXPECT_EQ(CoreTower::row_nodes(0), std::vector<std::string>{""});
  EXPECT_EQ(CoreTower::row_nodes(2), (std::vector<std::string>{"00", "01", "10", "11"}));
}

TEST(BuildTower, StructuralInvariants) {
  for_all_partitions(1, 20, [](const Partition& lambda) {
    const CoreTower t = build_tower(lambda);
    for (const auto& [node, label] : t.nonempty_labels()) {
      ASSERT_TRUE(is_two_core(label));
      ASSERT_LT(static_cast<int>(node.size()), t.depth());
    }
    const int n = lambda.size();
    ASSERT_LE(t.depth(), static_cast<int>(std::floor(std::log2(n))) + 1) << lambda;
    const auto w = t.row_weights();
    ASSERT_GT(w.back(), 0);
    long long total = 0;
    for (std::size_t r = 0; r < w.size(); ++r) total += static_cast<long long>(w[r]) << r;
    ASSERT_EQ(total, n) << lambda;
  });
}

TEST(BuildTower, ValuationIdentity) {
  for_all_partitions(0, 20, [](const Partition& lambda) {
    int weight_sum = 0;
    for (int w : build_tower(lambda).row_weights()) weight_sum += w;
    ASSERT_EQ(weight_sum - nu(static_cast<std::uint64_t>(lambda.size())), v2_dimension(lambda)) << lambda;
  });
}

TEST(BuildTower, RebuildsPartition) {
  for_all_partitions(0, 14, [](const Partition& lambda) {
    ASSERT_EQ(partition_from_tower(build_tower(lambda)), lambda) << lambda;
  });
}

TEST(OddCriterion, Examples) {
  EXPECT_TRUE(is_odd_partition_via_tower({1}));
  EXPECT_FALSE(is_odd_partition_via_tower({6, 5, 4, 2, 1, 1}));
  EXPECT_TRUE(is_odd_partition_via_tower({3}));
  EXPECT_FALSE(is_odd_partition_via_tower({2, 1}));
  EXPECT_TRUE(is_odd_partition_via_tower({}));
}

TEST(OddCriterion, AgreesWithValuation) {
  for_all_partitions(0, 20, [](const Partition& lambda) {
    ASSERT_EQ(is_odd_partition_via_tower(lambda), v2_dimension(lambda) == 0) << lambda;
  });
}

TEST(TwoMod4Criterion, Examples) {
  EXPECT_TRUE(is_two_mod4_via_tower({3, 1, 1}));
  for (int n = 1; n <= 20; ++n) EXPECT_FALSE(is_two_mod4_via_tower(Partition{n})) << n;
  EXPECT_EQ(is_two_mod4_via_tower({2, 2}), v2_dimension({2, 2}) == 1);
  EXPECT_TRUE(is_two_mod4_via_tower({2, 2}));
  EXPECT_FALSE(is_two_mod4_via_tower({3, 2, 1}));  // f = 16
  EXPECT_FALSE(is_two_mod4_via_tower({}));
}

TEST(TwoMod4Criterion, AgreesWithValuation) {
  for_all_partitions(0, 20, [](const Partition& lambda) {
    ASSERT_EQ(is_two_mod4_via_tower(lambda), v2_dimension(lambda) == 1) << lambda;
  });
}

TEST(TwoMod4Criterion, WeightsFollowSomePattern) {
  for_all_partitions(2, 18, [](const Partition& lambda) {
    if (v2_dimension(lambda) != 1) return;
    const auto n = static_cast<std::uint64_t>(lambda.size());
    const auto w = build_tower(lambda).row_weights();
    int matches = 0;
    for (int k : binary_support(n).bin_prime) {
      const auto p = weight_pattern(n, k);
      bool same = true;
      for (int i = 0; i < 64; ++i) {
        const int wi = static_cast<std::size_t>(i) < w.size() ? w[static_cast<std::size_t>(i)] : 0;
        if (wi != p.at(i)) same = false;
      }
      matches += same;
    }
    ASSERT_EQ(matches, 1) << lambda;
  });
}

}  // namespace
}  // namespace twocore
