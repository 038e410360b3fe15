#include <gtest/gtest.h>

#include <unordered_set>

#include "oracles.hpp"

using namespace cindex;

namespace {

// Every subgroup, by repeatedly joining cyclic subgroups onto known ones.
std::vector<Subgroup> all_subgroups(const Group& g) {
  std::vector<Subgroup> cyclics;
  std::unordered_set<MemberSet, MemberSetHash> seen;
  for (index_t x = 0; x < g.order(); ++x) {
    auto c = cyclic_subgroup(g, x);
    if (seen.insert(c.members()).second) cyclics.push_back(std::move(c));
  }
  std::vector<Subgroup> all = cyclics;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& c : cyclics) {
      if (c.is_subgroup_of(all[i])) continue;
      auto j = join(all[i], c);
      if (seen.insert(j.members()).second) all.push_back(std::move(j));
    }
  return all;
}

}  // namespace

TEST(Mci, Anchors) {
  EXPECT_EQ(mci(quaternion8()).m, 1u);
  EXPECT_EQ(mci(dihedral(8)).m, 2u);
  const auto m31 = mci(modular_example(3, 1));
  EXPECT_EQ(m31.m, 3u);
  EXPECT_EQ(m31.k_exp, 1u);
  EXPECT_THROW(mci(cyclic(12)), AbelianGroupError);
}

TEST(Mci, MatchesCentralizerScanOnCatalog) {
  for (const auto& e : oracle::catalog()) {
    if (e.order > 64 || is_abelian(e.group)) continue;
    const auto r = mci(e.group);
    ASSERT_EQ(r.m, oracle::mci(e.group)) << e.label;
  }
  for (const char* name : {"S3", "S4", "A4", "A5"}) {
    const Group g = oracle::perm_fixture(name);
    EXPECT_EQ(mci(g).m, oracle::mci(g)) << name;
  }
}

TEST(Mci, WitnessIsSmallestNonCentralAttainer) {
  for (const auto& e : oracle::catalog()) {
    if (e.order > 100 || is_abelian(e.group)) continue;
    const Group& g = e.group;
    const auto r = mci(g);
    const auto z = oracle::center(g);
    index_t first = 0;
    for (index_t x = 0; x < g.order(); ++x)
      if (!z[x] && oracle::count(oracle::centralizer(g, x)) / oracle::order_by_powers(g, x) == r.m) {
        first = x;
        break;
      }
    ASSERT_EQ(r.witness.idx, first) << e.label;
    ASSERT_EQ(g.order() % r.m, 0u);
  }
}

TEST(PrimeGraph, Examples) {
  const auto c15 = prime_graph(cyclic(15));
  EXPECT_EQ(c15.vertices, (std::vector<std::uint64_t>{3, 5}));
  EXPECT_TRUE(c15.connected(3, 5));
  EXPECT_EQ(c15.components.size(), 1u);

  const auto s3 = prime_graph(oracle::perm_fixture("S3"));
  EXPECT_FALSE(s3.connected(2, 3));
  EXPECT_EQ(s3.isolated, (std::vector<std::uint64_t>{2, 3}));

  const auto a5 = prime_graph(oracle::perm_fixture("A5"));
  EXPECT_EQ(a5.vertices, (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(a5.isolated.size(), 3u);
  EXPECT_EQ(a5.components.size(), 3u);

  EXPECT_THROW(prime_graph(cyclic(1)), GroupError);
}

TEST(PrimeGraph, EdgesMatchOrderScan) {
  for (const auto& e : oracle::catalog()) {
    if (e.order == 1) continue;
    const auto pg = prime_graph(e.group);
    const auto edges = oracle::prime_graph_edges(e.group);
    for (auto p : pg.vertices)
      for (auto q : pg.vertices) {
        if (p >= q) continue;
        ASSERT_EQ(pg.connected(p, q), edges.count({p, q}) == 1) << e.label;
      }
    std::size_t covered = 0;
    for (const auto& c : pg.components) covered += c.size();
    ASSERT_EQ(covered, pg.vertices.size());
  }
}

TEST(BadPrimes, Examples) {
  EXPECT_TRUE(bad_primes(quaternion8()).empty());
  EXPECT_EQ(bad_primes(oracle::perm_fixture("S3")), (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(bad_primes(oracle::perm_fixture("A5")), (std::vector<std::uint64_t>{3, 5}));
  EXPECT_THROW(bad_primes(cyclic(6)), AbelianGroupError);
}

TEST(BadPrimes, MatchDefinitionOnCatalog) {
  for (const auto& e : oracle::catalog()) {
    if (is_abelian(e.group)) continue;
    ASSERT_EQ(bad_primes(e.group), oracle::bad_primes(e.group)) << e.label;
  }
  for (const char* name : {"S3", "S4", "A4", "A5", "S5"}) {
    const Group g = oracle::perm_fixture(name);
    EXPECT_EQ(bad_primes(g), oracle::bad_primes(g)) << name;
  }
}

TEST(BadPrimes, InheritedBySubgroups) {
  std::vector<std::pair<std::string, Group>> groups;
  for (const auto& e : oracle::catalog())
    if (e.order <= 200) groups.push_back({e.label, e.group});
  for (const char* name : {"S3", "S4", "A4", "A5", "S5"}) groups.push_back({name, oracle::perm_fixture(name)});
  std::size_t checked = 0;
  for (const auto& [label, g] : groups) {
    if (is_abelian(g)) continue;
    const auto pis = bad_primes(g);
    if (pis.empty()) continue;
    for (const auto& h : all_subgroups(g)) {
      if (!is_abelian(h)) {
        const auto hg = as_group(h).group;
        const auto ph = bad_primes(hg);
        for (auto p : pis)
          if (h.order() % p == 0) {
            ++checked;
            ASSERT_TRUE(std::find(ph.begin(), ph.end(), p) != ph.end()) << label << " |H|=" << h.order() << " p=" << p;
          }
      }
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(IsolatedEquivalence, Examples) {
  EXPECT_TRUE(isolated_equivalence_check(oracle::perm_fixture("S3")));
  EXPECT_TRUE(isolated_equivalence_check(oracle::perm_fixture("A5")));
  const Group s4 = oracle::perm_fixture("S4");
  EXPECT_EQ(bad_primes(s4), std::vector<std::uint64_t>{3});  // C3 is self-centralizing
  EXPECT_FALSE(prime_graph(s4).connected(2, 3));              // no element of order 6
  EXPECT_TRUE(isolated_equivalence_check(s4));
  EXPECT_THROW(isolated_equivalence_check(quaternion8()), GroupError);
}

TEST(IsolatedEquivalence, HoldsOnCenterlessCatalog) {
  std::size_t tested = 0;
  for (const auto& e : oracle::catalog()) {
    if (e.order == 1 || !center(e.group).is_trivial()) continue;
    ++tested;
    ASSERT_TRUE(isolated_equivalence_check(e.group)) << e.label;
  }
  EXPECT_GT(tested, 20u);
}

TEST(Reduction, Examples) {
  EXPECT_TRUE(reduction_check(oracle::perm_fixture("S3")));
  EXPECT_TRUE(reduction_check(oracle::perm_fixture("A5")));
  const Group g = direct_product(oracle::perm_fixture("S3"), cyclic(5));
  EXPECT_EQ(bad_primes(g), oracle::bad_primes(g));
  EXPECT_EQ(bad_primes(g), (std::vector<std::uint64_t>{2, 3}));
  EXPECT_TRUE(reduction_check(g));
  EXPECT_THROW(reduction_check(quaternion8()), GroupError);
}

TEST(Reduction, ContainmentOnCatalog) {
  for (const auto& e : oracle::catalog()) {
    if (is_abelian(e.group) || bad_primes(e.group).empty()) continue;
    ASSERT_TRUE(reduction_check(e.group)) << e.label;
    const auto q = quotient(e.group, center(e.group));
    const auto pq = oracle::bad_primes(q.quotient);
    for (auto p : bad_primes(e.group)) ASSERT_TRUE(std::find(pq.begin(), pq.end(), p) != pq.end()) << e.label;
  }
}

TEST(Ledger, F0Explicit) {
  EXPECT_EQ(f0_explicit(1), 8);
  EXPECT_EQ(f0_explicit(2), 8 * 16);
  EXPECT_EQ(f0_explicit(3), BigInt(8 * 81) * (8 * 81));
}

TEST(Ledger, Examples) {
  const auto q = build_ledger(quaternion8());
  const auto& ta = q.records.front();
  EXPECT_EQ(ta.claim, "TA");
  EXPECT_EQ(ta.lhs, 8);
  EXPECT_EQ(ta.rhs, 4);
  EXPECT_TRUE(ta.holds);
  EXPECT_EQ(ta.exemption, "Q8");

  const auto m = build_ledger(modular_example(2, 1));
  EXPECT_EQ(m.m, 2u);
  EXPECT_EQ(m.records.front().lhs, 16);
  EXPECT_EQ(m.records.front().rhs, 16);
  EXPECT_TRUE(m.records.front().exemption.empty());
  EXPECT_TRUE(m.all_hold());

  const auto s = build_ledger(oracle::perm_fixture("S3"));
  EXPECT_EQ(s.pi_star, (std::vector<std::uint64_t>{2, 3}));
  const auto tb = std::find_if(s.records.begin(), s.records.end(), [](const auto& r) { return r.claim == "TB"; });
  ASSERT_NE(tb, s.records.end());
  EXPECT_EQ(tb->lhs, 6);
  EXPECT_EQ(tb->rhs, 48);
  EXPECT_TRUE(tb->holds);
  EXPECT_THROW(build_ledger(cyclic(4)), AbelianGroupError);
}

TEST(Ledger, DihedralEightIsNotExempt) {
  const auto d = build_ledger(dihedral(8));
  EXPECT_TRUE(d.records.front().holds);
  EXPECT_TRUE(d.records.front().exemption.empty());
  EXPECT_FALSE(looks_like_q8(dihedral(8)));
  EXPECT_TRUE(looks_like_q8(quaternion8()));
}

TEST(Ledger, SylowRestrictionOnCatalog) {
  for (const auto& e : oracle::catalog()) {
    if (is_abelian(e.group)) continue;
    const std::uint64_t m = mci(e.group).m;
    for (auto p : prime_divisors(e.order)) {
      const auto s = sylow(e.group, p);
      if (is_abelian(s)) continue;
      ASSERT_LE(oracle::mci(as_group(s).group), m) << e.label << " p=" << p;
    }
  }
}

TEST(Classification, MciOneExactlyQ8AndPq) {
  for (const auto& e : oracle::catalog()) {
    if (e.order > 100 || is_abelian(e.group)) continue;
    const bool expected = oracle::is_q8(e.group) || oracle::is_pq_nonabelian_order(e.order);
    ASSERT_EQ(mci(e.group).m == 1, expected) << e.label;
  }
}
