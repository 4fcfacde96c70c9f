#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "avlrank/tree.hpp"

namespace avlrank {

class InvalidTarget : public Error {
 public:
  explicit InvalidTarget(ValidationReport r)
      : Error("target is not a valid AVL tree: " + r.to_string()), report(std::move(r)) {}
  ValidationReport report;
};

/// An insertion order that grows the empty tree into `target` using only
/// promotions.
///
/// The sequence is split into one slice per truncation level, deepest
/// first: slice 0 holds the rank-k root, slice i the keys of the nodes of
/// rank k - i. After slice i the working tree equals the (k - i)-fold
/// truncation of the target.
struct InsertionPlan {
  Tree target;
  std::vector<Key> sequence;
  /// Slice offsets into `sequence`: size is levels + 1, first 0, last n.
  std::vector<std::size_t> level_boundaries;

  std::size_t level_count() const {
    return level_boundaries.empty() ? 0 : level_boundaries.size() - 1;
  }
  std::span<const Key> level(std::size_t i) const {
    return std::span<const Key>(sequence).subspan(
        level_boundaries[i], level_boundaries[i + 1] - level_boundaries[i]);
  }
};

/// [T, T^(1), ..., T^(k)]: successive truncations of a non-empty tree.
std::vector<Tree> truncation_chain(const Tree& tree);

/// Leaves of `tree` in conversion order: at each node the subtree of lower
/// rank goes first, the left one on ties.
std::vector<Key> conversion_order(const Tree& tree);

/// Throws InvalidTarget if `target` fails validation.
InsertionPlan insertion_sequence(const Tree& target);

struct BuildResult {
  Tree tree;
  RebalanceCounters total;
};

BuildResult build_from_plan(const InsertionPlan& plan);

struct PromotionBuildReport {
  bool structurally_equal = false;
  RebalanceCounters total;
  /// Per slice: working tree equals the matching truncation afterwards.
  std::vector<bool> level_matches;
  /// Per slice: how many insertions changed the root rank.
  std::vector<int> root_rank_raises;

  bool ok() const;
};

/// Plans, replays, and checks the replay step by step. Throws InvalidTarget.
PromotionBuildReport verify_promotion_only(const Tree& target);

}  // namespace avlrank
