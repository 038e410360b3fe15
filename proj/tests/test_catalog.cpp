#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"

using namespace cindex;

namespace {

// Number of groups of order n for n = 1..100 (the standard enumeration).
constexpr int kGroupCounts[100] = {
    1, 1, 1, 2,  1, 2, 1, 5,   2, 2,  1, 5, 1, 2, 1, 14, 1, 5,  1, 5, 2, 2,  1, 15, 2,  2, 5, 4,  1, 4, 1, 51, 1, 2,
    1, 14, 1, 2, 2, 14, 1, 6,  1, 4,  2, 2, 1, 52, 2, 5, 1, 5,  1, 15, 2, 13, 2, 2, 1, 13, 1, 2, 4, 267, 1, 4, 1, 5,
    1, 4,  1, 50, 1, 2, 3, 4,  1, 6,  1, 52, 15, 2, 1, 15, 1, 2, 1, 12, 1, 10, 1, 4, 2, 2, 1, 231, 1, 5, 2, 16};

std::uint64_t partitions(unsigned e) {
  std::vector<std::uint64_t> p(e + 1, 0);
  p[0] = 1;
  for (unsigned part = 1; part <= e; ++part)
    for (unsigned s = part; s <= e; ++s) p[s] += p[s - part];
  return p[e];
}

}  // namespace

TEST(Census, GroupCountsPerOrder) {
  std::map<std::size_t, int> counts;
  for (const auto& e : oracle::catalog()) ++counts[e.order];
  for (std::size_t n = 1; n <= 100; ++n) EXPECT_EQ(counts[n], kGroupCounts[n - 1]) << "order " << n;
  EXPECT_EQ(counts[125], 5);
  EXPECT_EQ(counts[243], 67);
  EXPECT_EQ(counts[343], 5);
  EXPECT_EQ(oracle::catalog().size(), 1125u);
}

TEST(Census, LabelsMatchOrders) {
  for (const auto& e : oracle::catalog()) {
    const std::string prefix = "SmallGroup(" + std::to_string(e.order) + ",";
    ASSERT_EQ(e.label.rfind(prefix, 0), 0u) << e.label;
  }
}

TEST(Census, AbelianCountIsProductOfPartitionNumbers) {
  std::map<std::size_t, std::uint64_t> abelian;
  for (const auto& e : oracle::catalog())
    if (is_abelian(e.group)) ++abelian[e.order];
  for (const auto& [n, count] : abelian) {
    std::uint64_t expected = 1;
    for (auto [p, k] : factorize(n)) expected *= partitions(k);
    EXPECT_EQ(count, expected) << "order " << n;
  }
  EXPECT_EQ(abelian[64], 11u);
  EXPECT_EQ(abelian[243], 7u);
}

TEST(Census, GroupAxiomsOnEveryEntry) {
  std::mt19937_64 rng(17);
  for (const auto& e : oracle::catalog()) ASSERT_EQ(check_group_axioms(e.group, rng), "") << e.label;
}

TEST(Census, ElementOrdersDivideGroupOrder) {
  for (const auto& e : oracle::catalog())
    for (index_t x = 0; x < e.order; ++x) {
      ASSERT_EQ(e.order % e.group.element_order(x), 0u) << e.label;
      if (e.order <= 100) ASSERT_EQ(e.group.element_order(x), oracle::order_by_powers(e.group, x));
    }
}

TEST(Census, PermutationFixtures) {
  const std::map<std::string, std::size_t> expected{{"S3", 6}, {"S4", 24}, {"A4", 12}, {"A5", 60}, {"S5", 120}};
  std::mt19937_64 rng(19);
  for (const auto& [name, order] : expected) {
    const Group g = oracle::perm_fixture(name);
    EXPECT_EQ(g.order(), order) << name;
    EXPECT_EQ(check_group_axioms(g, rng), "") << name;
  }
}
