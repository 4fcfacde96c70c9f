#include "avlrank/builder.hpp"

#include <algorithm>

namespace avlrank {

namespace {

void convert(const Tree& t, Handle h, std::vector<Key>& out) {
  if (h == kNil) return;
  if (t.is_leaf(h)) {
    out.push_back(t.node(h).key);
    return;
  }
  Handle l = t.left(h);
  Handle r = t.right(h);
  if (t.rank_of(l) <= t.rank_of(r)) {
    convert(t, l, out);
    convert(t, r, out);
  } else {
    convert(t, r, out);
    convert(t, l, out);
  }
}

}  // namespace

std::vector<Tree> truncation_chain(const Tree& tree) {
  std::vector<Tree> chain;
  if (tree.empty()) return chain;
  chain.push_back(tree);
  while (chain.back().rank() > 0) chain.push_back(truncate(chain.back()));
  return chain;
}

std::vector<Key> conversion_order(const Tree& tree) {
  std::vector<Key> out;
  convert(tree, tree.root(), out);
  return out;
}

InsertionPlan insertion_sequence(const Tree& target) {
  ValidationReport report = validate(target);
  if (!report.ok()) throw InvalidTarget(std::move(report));

  InsertionPlan plan;
  plan.target = target;
  plan.level_boundaries.push_back(0);
  const std::vector<Tree> chain = truncation_chain(target);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    std::vector<Key> slice = conversion_order(*it);
    plan.sequence.insert(plan.sequence.end(), slice.begin(), slice.end());
    plan.level_boundaries.push_back(plan.sequence.size());
  }
  return plan;
}

BuildResult build_from_plan(const InsertionPlan& plan) {
  BuildResult out;
  for (Key k : plan.sequence) out.total += out.tree.insert(k).counters;
  return out;
}

bool PromotionBuildReport::ok() const {
  return structurally_equal && total.single_rotations == 0 && total.double_rotations == 0 &&
         total.demotions == 0 &&
         std::all_of(level_matches.begin(), level_matches.end(), [](bool b) { return b; }) &&
         std::all_of(root_rank_raises.begin(), root_rank_raises.end(),
                     [](int r) { return r == 1; });
}

PromotionBuildReport verify_promotion_only(const Tree& target) {
  const InsertionPlan plan = insertion_sequence(target);
  const std::vector<Tree> chain = truncation_chain(target);

  PromotionBuildReport report;
  Tree work;
  for (std::size_t i = 0; i < plan.level_count(); ++i) {
    int raises = 0;
    for (Key k : plan.level(i)) {
      const int before = work.rank();
      report.total += work.insert(k).counters;
      if (work.rank() != before) ++raises;
    }
    const Tree& expected = chain[chain.size() - 1 - i];
    report.level_matches.push_back(structural_equal(work, expected));
    report.root_rank_raises.push_back(raises);
  }
  report.structurally_equal = structural_equal(work, target);
  return report;
}

}  // namespace avlrank
