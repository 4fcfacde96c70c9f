#include <gtest/gtest.h>

#include <random>

#include "avlrank/oracle.hpp"
#include "support.hpp"

namespace avlrank {
namespace {

using test::from_inserts;

TEST(Insert, IntoEmptyTreeMakesRankZeroLeaf) {
  Tree t;
  OpResult r = t.insert(Key{7});
  EXPECT_EQ(serialize(t), "(7;0 - -)");
  EXPECT_EQ(r.counters, RebalanceCounters{});
  EXPECT_TRUE(r.trace.empty());
}

TEST(Insert, PromotionsOnly) {
  // Replayed independently through the height-based oracle: same shape.
  RebalanceCounters total;
  Tree t = from_inserts({3, 2, 4, 1}, &total);
  EXPECT_EQ(serialize(t), test::kRank2L);
  EXPECT_EQ(total.promotions, 3u);
  EXPECT_EQ(total.rotations_total(), 0u);

  oracle::ClassicAvl o;
  for (auto k : {3, 2, 4, 1}) o.insert(Key{static_cast<std::uint64_t>(k)});
  EXPECT_TRUE(structural_equal(t, o.to_tree()));
  EXPECT_EQ(o.rotations(), 0u);
}

TEST(Insert, AscendingTripleFiresOneSingleRotation) {
  Tree t;
  t.insert(Key{1});
  t.insert(Key{2});
  OpResult r = t.insert(Key{3});
  // Leaf 2 is promoted first, then root 1 is 0,2.
  EXPECT_EQ(r.trace, (CaseTrace{Case::InsPromote, Case::InsSingle}));
  EXPECT_EQ(r.counters.single_rotations, 1u);
  EXPECT_EQ(t.node(t.root()).key, Key{2});
  EXPECT_EQ(serialize(t), "(2;1 (1;0 - -) (3;0 - -))");

  oracle::ClassicAvl o;
  for (auto k : {1, 2, 3}) o.insert(Key{static_cast<std::uint64_t>(k)});
  EXPECT_TRUE(structural_equal(t, o.to_tree()));
}

TEST(Insert, ZigZagFiresDoubleRotation) {
  Tree t = from_inserts({3, 1});
  OpResult r = t.insert(Key{2});
  EXPECT_EQ(r.trace, (CaseTrace{Case::InsPromote, Case::InsDouble}));
  EXPECT_EQ(r.counters.rotations_total(), 2u);
  EXPECT_EQ(serialize(t), "(2;1 (1;0 - -) (3;0 - -))");
}

TEST(Insert, DuplicateKeyLeavesTreeUnchanged) {
  Tree t = from_inserts({3, 2, 4, 1});
  const std::string before = serialize(t);
  EXPECT_THROW(t.insert(Key{2}), DuplicateKey);
  EXPECT_EQ(serialize(t), before);
  EXPECT_EQ(t.size(), 4u);
}

TEST(Remove, OnlyNodeLeavesEmptyTree) {
  Tree t = from_inserts({1});
  OpResult r = t.remove(Key{1});
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(t.size(), 0u);
  EXPECT_EQ(r.counters, RebalanceCounters{});
}

TEST(Remove, MissingKeyLeavesTreeUnchanged) {
  Tree t = from_inserts({3, 2, 4, 1});
  const std::string before = serialize(t);
  EXPECT_THROW(t.remove(Key{9}), KeyNotFound);
  EXPECT_EQ(serialize(t), before);
}

TEST(Remove, ShallowLeafOfRank2TypeL) {
  Tree t = deserialize(test::kRank2L);
  OpResult r = t.remove(Key{4});
  EXPECT_EQ(r.trace, CaseTrace{Case::DelSingleRepeat});
  EXPECT_EQ(r.counters.demotions, 0u);
  EXPECT_EQ(t.rank(), 1);
  EXPECT_EQ(serialize(t), "(2;1 (1;0 - -) (3;0 - -))");
}

TEST(Remove, ShallowLeafOfRank4TypeL) {
  // x(y(A, B), C) with A = rank-2 L, B = minimal rank-1 tree, C = rank-2 R.
  const char* text =
      "(8;4 (5;3 (3;2 (2;1 (1;0 - -) -) (4;0 - -)) (7;1 (6;0 - -) -)) "
      "(10;2 (9;0 - -) (11;1 - (12;0 - -))))";
  Tree t = deserialize(text);
  OpResult r = t.remove(Key{9});
  EXPECT_EQ(r.counters.single_rotations, 2u);
  EXPECT_EQ(r.counters.double_rotations, 0u);
  EXPECT_EQ(r.counters.demotions, 0u);
  EXPECT_EQ(t.rank(), 3);
  EXPECT_TRUE(validate(t).ok());

  // The height-based oracle needs the same number of structural rotations.
  auto o = oracle::ClassicAvl::from_tree(deserialize(text));
  o.remove(Key{9});
  EXPECT_EQ(o.rotations(), 2u);
  EXPECT_TRUE(structural_equal(t, o.to_tree()));
}

TEST(Remove, BinaryNodeTakesSuccessorPosition) {
  Tree t = from_inserts({2, 1, 3});
  t.remove(Key{2});
  EXPECT_EQ(serialize(t), "(3;1 (1;0 - -) -)");
}

TEST(Remove, DemotionCascade) {
  Tree t = from_inserts({2, 1, 3});
  t.remove(Key{1});
  OpResult r = t.remove(Key{3});
  EXPECT_EQ(r.trace, CaseTrace{Case::DelDemote});
  EXPECT_EQ(serialize(t), "(2;0 - -)");
}

TEST(Remove, SiblingOneOneStopsAfterSingleRotation) {
  Tree t = deserialize("(4;2 (2;1 (1;0 - -) (3;0 - -)) (5;0 - -))");
  OpResult r = t.remove(Key{5});
  EXPECT_EQ(r.trace, CaseTrace{Case::DelSingleStop});
  EXPECT_EQ(serialize(t), "(2;2 (1;0 - -) (4;1 (3;0 - -) -))");
}

TEST(Remove, InnerOneChildFiresDoubleRotation) {
  Tree t = deserialize("(4;2 (2;1 - (3;0 - -)) (5;0 - -))");
  OpResult r = t.remove(Key{5});
  EXPECT_EQ(r.trace, CaseTrace{Case::DelDouble});
  EXPECT_EQ(serialize(t), "(3;1 (2;0 - -) (4;0 - -))");
}

TEST(Rotate, RightThenLeftRestoresShape) {
  Tree t = from_inserts({3, 2, 4, 1});
  const Tree before = t;
  Handle x = t.root();
  t.rotate(x, Direction::Right);
  EXPECT_EQ(t.node(t.root()).key, Key{2});
  t.rotate(t.root(), Direction::Left);
  EXPECT_TRUE(structural_equal(t, before));
}

TEST(Rotate, TwoNodeChain) {
  Tree t = from_inserts({1, 2});
  t.rotate(t.root(), Direction::Left);
  EXPECT_EQ(t.node(t.root()).key, Key{2});
  EXPECT_EQ(t.keys(), test::keys({1, 2}));
}

TEST(Rotate, MissingChildThrows) {
  Tree t = from_inserts({1, 2});
  EXPECT_THROW(t.rotate(t.root(), Direction::Right), MissingChild);
}

TEST(Rotate, PreservesSymmetricOrder) {
  std::mt19937 rng(11);
  Tree t;
  for (std::uint64_t k = 1; k <= 40; ++k) t.insert(Key{k * 7 % 41});
  const auto before = t.keys();
  for (int i = 0; i < 200; ++i) {
    Handle h = static_cast<Handle>(rng() % t.size());
    Direction d = rng() % 2 ? Direction::Left : Direction::Right;
    Handle child = d == Direction::Right ? t.left(h) : t.right(h);
    if (child == kNil) {
      EXPECT_THROW(t.rotate(h, d), MissingChild);
    } else {
      t.rotate(h, d);
    }
    ASSERT_EQ(t.keys(), before);
  }
}

TEST(CaseTraceShape, InsertAndDeleteTracesHaveTheDocumentedForm) {
  std::mt19937_64 rng(3);
  Tree t;
  for (int i = 0; i < 5000; ++i) {
    const std::uint64_t k = rng() % 300;
    if (t.contains(Key{k})) {
      const int pre_rank = t.rank();
      OpResult r = t.remove(Key{k});
      ASSERT_EQ(r.counters.steps, r.trace.size());
      for (std::size_t j = 0; j + 1 < r.trace.size(); ++j) {
        ASSERT_NE(r.trace[j], Case::DelSingleStop);
      }
      for (Case c : r.trace) {
        ASSERT_TRUE(c >= Case::DelDemote);
      }
      ASSERT_LE(r.counters.rotations_total(), static_cast<std::uint64_t>(pre_rank));
      ASSERT_EQ(r.counters.promotions, 0u);
    } else {
      OpResult r = t.insert(Key{k});
      ASSERT_EQ(r.counters.steps, r.trace.size());
      for (std::size_t j = 0; j + 1 < r.trace.size(); ++j) {
        ASSERT_EQ(r.trace[j], Case::InsPromote);
      }
      ASSERT_LE(r.counters.single_rotations + r.counters.double_rotations, 1u);
      ASSERT_EQ(r.counters.demotions, 0u);
    }
    ASSERT_TRUE(validate(t).ok());
  }
}

}  // namespace
}  // namespace avlrank
