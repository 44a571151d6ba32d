#include <gtest/gtest.h>

#include "slimlat/congruence.hpp"
#include "slimlat/poset_tools.hpp"
#include "support.hpp"

using namespace slimlat;

namespace {

long long library_count(const FiniteLattice& l) { return static_cast<long long>(congruence_lattice(l).size); }

}  // namespace

TEST(Congruence, CountsMatchPartitionEnumeration) {
  for (const auto& l : {fixtures::n5(), fixtures::m3(), fixtures::b3(), fixtures::chain(3), fixtures::chain(4),
                        fixtures::built(fixtures::kS7).lattice(), fixtures::built(fixtures::kB2).lattice()})
    EXPECT_EQ(library_count(l), oracle::count_congruences(fixtures::order_of(l)));
}

TEST(Congruence, KnownSizes) {
  EXPECT_EQ(library_count(fixtures::m3()), 2);
  EXPECT_EQ(library_count(fixtures::n5()), 5);
  EXPECT_EQ(library_count(fixtures::b3()), 8);
  EXPECT_EQ(library_count(fixtures::chain(3)), 4);
}

TEST(Congruence, PrincipalMatchesOracle) {
  for (const auto& l : {fixtures::n5(), fixtures::b3(), fixtures::built(fixtures::kWideFork).lattice()}) {
    const auto o = fixtures::order_of(l);
    for (const auto& [a, b] : l.poset().covers()) {
      const Congruence c = principal_congruence(l, a, b);
      const auto m = oracle::principal_congruence(o, a, b);
      for (int x = 0; x < l.size(); ++x)
        for (int y = 0; y < l.size(); ++y) ASSERT_EQ(c.same(x, y), static_cast<bool>(m[x][y]));
      EXPECT_TRUE(is_compatible(l, c));
      EXPECT_TRUE(has_convex_blocks(l, c));
    }
  }
}

TEST(Congruence, JirPosetMatchesOracle) {
  for (const auto& l : {fixtures::n5(), fixtures::b3(), fixtures::built(fixtures::kS7).lattice(),
                        fixtures::built(fixtures::kSandwich).lattice()}) {
    const auto cl = congruence_lattice(l);
    const auto jc = oracle::jir_con(fixtures::order_of(l));
    EXPECT_TRUE(oracle::iso(oracle::from_poset(cl.order), jc.order).has_value());
    EXPECT_EQ(cl.size, count_down_sets(cl.order));
  }
}

TEST(Congruence, JoinAndRefinement) {
  const auto l = fixtures::chain(3);
  const Congruence a = principal_congruence(l, 0, 1);
  const Congruence b = principal_congruence(l, 1, 2);
  const Congruence j = congruence_join(a, b);
  EXPECT_EQ(j.block_count(), 1);
  EXPECT_TRUE(a.refines(j));
  EXPECT_FALSE(j.refines(a));
  EXPECT_TRUE(identity_congruence(3).refines(a));
  EXPECT_EQ(find_congruence(congruence_lattice(l), a) >= 0, true);
}

TEST(Congruence, IncompatiblePartitionRejected) {
  const auto l = fixtures::n5();
  // Collapsing 0 with c alone: joining with a separates a from the top.
  EXPECT_FALSE(is_compatible(l, Congruence({0, 1, 2, 0, 3})));
  // Blocks {0, 2} skip over 1.
  EXPECT_FALSE(has_convex_blocks(l, Congruence({0, 1, 0, 2, 3})));
  EXPECT_TRUE(is_compatible(l, principal_congruence(l, 1, 2)));
}

TEST(Congruence, CountDownSets) {
  EXPECT_EQ(count_down_sets(named_poset("antichain", 3)), 8u);
  EXPECT_EQ(count_down_sets(named_poset("chain", 3)), 4u);
  EXPECT_EQ(count_down_sets(named_poset("Y", 4)), 6u);
}

TEST(Congruence, TrivialCases) {
  // Con of a 3-chain and of B_2 is the four-element Boolean lattice.
  for (const auto& l : {fixtures::chain(3), fixtures::built(fixtures::kB2).lattice()}) {
    const auto cl = congruence_lattice(l);
    EXPECT_EQ(cl.size, 4u);
    EXPECT_EQ(cl.jir.size(), 2u);
    EXPECT_TRUE(cl.order.covers().empty());
  }
}
