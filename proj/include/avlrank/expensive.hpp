#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avlrank/tree.hpp"

namespace avlrank {

/// Even-rank trees on which deleting the shallow leaf costs k/2 rotations.
///
/// A member of rank 0 is the one-node tree. A member of rank k + 2 has a
/// root of rank k + 2 over a child of rank k + 1 and three subtrees A, B, C
/// in symmetric order, where A and C are members of rank k and B is any AVL
/// tree of rank k - 1:
///
///   type L:  x(y(A, B), C)     type R:  y(A, x(B, C))
///
/// Each shallow-leaf delete/reinsert pair turns type L into type R and back.
enum class EType { L, R };

std::string_view to_string(EType t);
EType opposite(EType t);

/// How the free subtree B is instantiated by the generator.
enum class BPolicy { MinimalAVL, Perfect };

std::string_view to_string(BPolicy p);

class OddRank : public Error {
 public:
  using Error::Error;
};

class NotExpensive : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Hands out consecutive keys; generators draw from it in symmetric order.
class KeySequence {
 public:
  explicit KeySequence(std::uint64_t first = 1) : next_(first) {}
  Key next() { return Key{next_++}; }

 private:
  std::uint64_t next_;
};

/// F(-1) = 0, F(0) = 1, F(r) = 1 + F(r-1) + F(r-2).
std::uint64_t min_avl_size(int rank);

/// The fewest-node AVL tree of the given rank (taller subtree on the left).
Tree min_avl(int rank, KeySequence& keys);
Tree min_avl(int rank);

/// Perfect tree of the given rank.
Tree perfect_tree(int rank, KeySequence& keys);

/// Member of E with the requested top-level type, keys 1..n in order.
/// A takes the parent's type and C the opposite one. Throws OddRank.
Tree gen_expensive(int rank, EType etype, BPolicy policy = BPolicy::MinimalAVL);

/// Node count of gen_expensive(rank, *, policy).
std::uint64_t expensive_size(int rank, BPolicy policy = BPolicy::MinimalAVL);

struct EClassification {
  bool member = false;
  int rank = -1;
  /// Set for members of rank >= 2.
  std::optional<EType> etype;
  /// Classifications of A and C, in that order, for members of rank >= 2.
  std::vector<EClassification> parts;
};

/// Recursive pattern match against the definition of E. Expects a valid tree.
EClassification classify_expensive(const Tree& tree);
EClassification classify_expensive(const Tree& tree, Handle h);

/// The leaf reached from the root by always stepping to the 2-child.
/// Throws NotExpensive for non-members.
Key shallow_leaf(const Tree& tree);

struct PairReport {
  int rank_before = -1;
  RebalanceCounters delete_counters;
  CaseTrace delete_trace;
  RebalanceCounters insert_counters;
  CaseTrace insert_trace;
  int rank_after_delete = -1;
  std::optional<EType> etype_before;
  std::optional<EType> etype_after;
  bool still_member = false;

  /// Differences from the exact costs: k/2 single rotations and nothing
  /// else on deletion, rank k - 1 afterwards, k promotions and nothing
  /// else on reinsertion, membership kept with the type flipped.
  std::vector<std::string> deviations() const;
  bool as_expected() const { return deviations().empty(); }
};

/// Deletes the shallow leaf and reinserts the same key. Throws NotExpensive.
PairReport delete_reinsert_pair(Tree& tree);

std::vector<PairReport> run_pairs(Tree& tree, std::size_t count);

/// Smallest p >= 1 such that p pairs restore the starting tree exactly.
/// The tree is left in its starting state. Throws CapExceeded.
std::size_t period(Tree& tree, std::size_t cap);

}  // namespace avlrank
