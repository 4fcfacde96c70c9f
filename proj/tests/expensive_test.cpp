#include <gtest/gtest.h>

#include <array>
#include <map>

#include "avlrank/expensive.hpp"
#include "avlrank/oracle.hpp"
#include "support.hpp"

namespace avlrank {
namespace {

TEST(MinAvl, SizesFollowRecurrence) {
  EXPECT_TRUE(min_avl(-1).empty());
  EXPECT_EQ(min_avl(2).size(), 4u);
  EXPECT_EQ(min_avl(5).size(), 20u);
  for (int r = -1; r <= 20; ++r) {
    const Tree t = min_avl(r);
    ASSERT_EQ(t.size(), min_avl_size(r));
    ASSERT_EQ(t.rank(), r);
    ASSERT_TRUE(validate(t).ok());
  }
}

TEST(MinAvl, MatchesEnumeratedMinimum) {
  // Fewest nodes among all enumerated AVL shapes of each height.
  std::map<int, std::size_t> fewest;
  for (int n = 14; n >= 0; --n) {
    for (const Tree& t : oracle::enumerate_avl_shapes(n).shapes) fewest[t.rank()] = n;
  }
  for (int r = 0; r <= 4; ++r) EXPECT_EQ(fewest.at(r), min_avl_size(r)) << r;
}

TEST(GenExpensive, RankZeroIsOneNode) {
  EXPECT_EQ(serialize(gen_expensive(0, EType::L)), "(1;0 - -)");
}

TEST(GenExpensive, Rank2Shapes) {
  EXPECT_EQ(serialize(gen_expensive(2, EType::L)), test::kRank2L);
  EXPECT_EQ(serialize(gen_expensive(2, EType::R)), test::kRank2R);
}

TEST(GenExpensive, OddRankThrows) {
  EXPECT_THROW(gen_expensive(3, EType::L), OddRank);
  EXPECT_THROW(gen_expensive(-2, EType::L), OddRank);
}

TEST(GenExpensive, SizesAndMembership) {
  EXPECT_EQ(gen_expensive(6, EType::L).size(), 33u);
  for (BPolicy p : {BPolicy::MinimalAVL, BPolicy::Perfect}) {
    for (EType e : {EType::L, EType::R}) {
      for (int k = 0; k <= 12; k += 2) {
        const Tree t = gen_expensive(k, e, p);
        ASSERT_TRUE(validate(t).ok());
        ASSERT_EQ(t.size(), expensive_size(k, p));
        ASSERT_EQ(t.keys().front(), Key{1});
        ASSERT_EQ(t.keys().back(), Key{t.size()});
        EClassification c = classify_expensive(t);
        ASSERT_TRUE(c.member) << k;
        ASSERT_EQ(c.rank, k);
        if (k >= 2) ASSERT_EQ(c.etype, e);
      }
    }
  }
}

TEST(GenExpensive, CountingLaw) {
  for (int k = 2; k <= 20; k += 2) {
    EXPECT_EQ(gen_expensive(k, EType::L).size(),
              2 * gen_expensive(k - 2, EType::L).size() + min_avl_size(k - 3) + 2);
  }
}

TEST(Classify, SingleNodeIsMember) {
  EClassification c = classify_expensive(deserialize("(1;0 - -)"));
  EXPECT_TRUE(c.member);
  EXPECT_EQ(c.rank, 0);
  EXPECT_FALSE(c.etype.has_value());
}

TEST(Classify, PerfectTreeIsNotMember) {
  KeySequence keys;
  EXPECT_FALSE(classify_expensive(perfect_tree(2, keys)).member);
  EXPECT_FALSE(classify_expensive(Tree{}).member);
  EXPECT_FALSE(classify_expensive(min_avl(1)).member);
}

TEST(Classify, PartsDescribeAAndC) {
  EClassification c = classify_expensive(gen_expensive(4, EType::L));
  ASSERT_EQ(c.parts.size(), 2u);
  EXPECT_EQ(c.parts[0].etype, EType::L);
  EXPECT_EQ(c.parts[1].etype, EType::R);
}

TEST(ShallowLeaf, Examples) {
  EXPECT_EQ(shallow_leaf(deserialize("(5;0 - -)")), Key{5});
  EXPECT_EQ(shallow_leaf(gen_expensive(2, EType::L)), Key{4});
  EXPECT_EQ(shallow_leaf(gen_expensive(2, EType::R)), Key{1});
  KeySequence keys;
  EXPECT_THROW(shallow_leaf(perfect_tree(2, keys)), NotExpensive);
}

TEST(Pair, Rank2TypeL) {
  Tree t = gen_expensive(2, EType::L);
  PairReport r = delete_reinsert_pair(t);
  EXPECT_EQ(r.delete_trace, CaseTrace{Case::DelSingleRepeat});
  EXPECT_EQ(r.rank_after_delete, 1);
  EXPECT_EQ(r.insert_trace, (CaseTrace{Case::InsPromote, Case::InsPromote}));
  EXPECT_EQ(r.etype_after, EType::R);
  EXPECT_TRUE(r.as_expected());
  EXPECT_TRUE(structural_equal(t, gen_expensive(2, EType::R)));
}

TEST(Pair, Rank2TypeRTakesTwoPromotions) {
  Tree t = gen_expensive(2, EType::R);
  PairReport r = delete_reinsert_pair(t);
  EXPECT_EQ(r.insert_counters.promotions, 2u);
  EXPECT_EQ(r.etype_after, EType::L);
  EXPECT_TRUE(structural_equal(t, gen_expensive(2, EType::L)));
}

TEST(Pair, RankZeroIsIdentity) {
  Tree t = gen_expensive(0, EType::L);
  PairReport r = delete_reinsert_pair(t);
  EXPECT_EQ(r.delete_counters, RebalanceCounters{});
  EXPECT_EQ(r.insert_counters, RebalanceCounters{});
  EXPECT_EQ(r.rank_after_delete, -1);
  EXPECT_TRUE(r.as_expected());
  EXPECT_EQ(serialize(t), "(1;0 - -)");
}

TEST(Pair, Rank6) {
  Tree t = gen_expensive(6, EType::R, BPolicy::Perfect);
  PairReport r = delete_reinsert_pair(t);
  EXPECT_EQ(r.delete_counters.single_rotations, 3u);
  EXPECT_EQ(r.insert_counters.promotions, 6u);
  EXPECT_TRUE(r.still_member);
  EXPECT_EQ(r.etype_after, EType::L);
  EXPECT_TRUE(r.deviations().empty());
}

TEST(Pair, NotExpensive) {
  KeySequence keys;
  Tree t = perfect_tree(3, keys);
  EXPECT_THROW(delete_reinsert_pair(t), NotExpensive);
}

TEST(Pair, DynamicsKeepAAndBAndAdvanceC) {
  // L(A, B, C) -> R(A, B, pair(C)); R(A, B, C) -> L(pair(A), B, C).
  for (EType e : {EType::L, EType::R}) {
    Tree t = gen_expensive(8, e);
    const Tree before = t;
    auto subtrees = [](const Tree& x) {
      Handle r = x.root();
      EClassification c = classify_expensive(x);
      if (*c.etype == EType::L) {
        return std::array<Handle, 3>{x.left(x.left(r)), x.right(x.left(r)), x.right(r)};
      }
      return std::array<Handle, 3>{x.left(r), x.left(x.right(r)), x.right(x.right(r))};
    };
    const auto sb = subtrees(before);
    delete_reinsert_pair(t);
    const auto sa = subtrees(t);

    const int moving = e == EType::L ? 2 : 0;
    const int fixed = e == EType::L ? 0 : 2;
    EXPECT_TRUE(structural_equal(before, sb[fixed], t, sa[fixed]));
    EXPECT_TRUE(structural_equal(before, sb[1], t, sa[1]));
    Tree moved = copy_subtree(before, sb[moving]);
    delete_reinsert_pair(moved);
    EXPECT_TRUE(structural_equal(moved, moved.root(), t, sa[moving]));
  }
}

TEST(RunPairs, ZeroPairs) {
  Tree t = gen_expensive(4, EType::L);
  const Tree before = t;
  EXPECT_TRUE(run_pairs(t, 0).empty());
  EXPECT_TRUE(structural_equal(t, before));
}

TEST(RunPairs, Rank2ReturnsAfterTwo) {
  Tree t = gen_expensive(2, EType::L);
  const Tree start = t;
  auto reps = run_pairs(t, 2);
  EXPECT_EQ(reps.size(), 2u);
  EXPECT_TRUE(structural_equal(t, start));
}

TEST(RunPairs, Rank4ReturnsAfterFourAndNotBefore) {
  Tree t = gen_expensive(4, EType::L);
  const Tree start = t;
  for (int i = 1; i <= 4; ++i) {
    PairReport r = delete_reinsert_pair(t);
    EXPECT_TRUE(r.as_expected());
    EXPECT_EQ(structural_equal(t, start), i == 4) << i;
    EXPECT_EQ(t.keys(), start.keys());
  }
}

TEST(Period, Values) {
  Tree t0 = gen_expensive(0, EType::L);
  EXPECT_EQ(period(t0, 4), 1u);
  Tree t2 = gen_expensive(2, EType::R);
  EXPECT_EQ(period(t2, 4), 2u);
  Tree t8 = gen_expensive(8, EType::L, BPolicy::Perfect);
  const Tree start = t8;
  EXPECT_EQ(period(t8, 16), 16u);
  EXPECT_TRUE(structural_equal(t8, start));
}

TEST(Period, CapExceededRestoresTree) {
  Tree t = gen_expensive(4, EType::L);
  const Tree start = t;
  EXPECT_THROW(period(t, 3), CapExceeded);
  EXPECT_TRUE(structural_equal(t, start));
}

TEST(SameRankB, BreaksTheExactCosts) {
  // x(y(A, B), C) with B as tall as A and C: the rank-2 shape is not in E,
  // its deletion stops early and the reinsertion promotes nothing.
  Tree t = deserialize("(4;2 (2;1 (1;0 - -) (3;0 - -)) (5;0 - -))");
  EXPECT_FALSE(classify_expensive(t).member);
  OpResult del = t.remove(Key{5});
  EXPECT_EQ(del.trace, CaseTrace{Case::DelSingleStop});
  EXPECT_EQ(t.rank(), 2);
  OpResult ins = t.insert(Key{5});
  EXPECT_EQ(ins.counters.promotions, 0u);
}

}  // namespace
}  // namespace avlrank
