#include "avlrank/expensive.hpp"

namespace avlrank {

std::string_view to_string(EType t) { return t == EType::L ? "L" : "R"; }

EType opposite(EType t) { return t == EType::L ? EType::R : EType::L; }

std::string_view to_string(BPolicy p) {
  return p == BPolicy::MinimalAVL ? "minimal" : "perfect";
}

namespace {

Handle emit_min(Tree& t, int rank, KeySequence& keys) {
  if (rank < 0) return kNil;
  Handle l = emit_min(t, rank - 1, keys);
  Handle h = t.add_node(keys.next(), rank);
  Handle r = emit_min(t, rank - 2, keys);
  t.set_children(h, l, r);
  return h;
}

Handle emit_perfect(Tree& t, int rank, KeySequence& keys) {
  if (rank < 0) return kNil;
  Handle l = emit_perfect(t, rank - 1, keys);
  Handle h = t.add_node(keys.next(), rank);
  Handle r = emit_perfect(t, rank - 1, keys);
  t.set_children(h, l, r);
  return h;
}

Handle emit_expensive(Tree& t, int rank, EType etype, BPolicy policy, KeySequence& keys) {
  if (rank == 0) return t.add_node(keys.next(), 0);
  const int k = rank - 2;
  // Symmetric order is A, y, B, x, C for both types.
  Handle a = emit_expensive(t, k, etype, policy, keys);
  Key ky = keys.next();
  Handle b = policy == BPolicy::MinimalAVL ? emit_min(t, k - 1, keys)
                                           : emit_perfect(t, k - 1, keys);
  Key kx = keys.next();
  Handle c = emit_expensive(t, k, opposite(etype), policy, keys);

  if (etype == EType::L) {
    Handle y = t.add_node(ky, k + 1);
    Handle x = t.add_node(kx, k + 2);
    t.set_children(y, a, b);
    t.set_children(x, y, c);
    return x;
  }
  Handle x = t.add_node(kx, k + 1);
  Handle y = t.add_node(ky, k + 2);
  t.set_children(x, b, c);
  t.set_children(y, a, x);
  return y;
}

bool is_rank(const Tree& t, Handle h, int r) { return t.rank_of(h) == r; }

}  // namespace

std::uint64_t min_avl_size(int rank) {
  std::uint64_t prev = 0, cur = 1;  // F(-1), F(0)
  if (rank < 0) return 0;
  for (int r = 1; r <= rank; ++r) {
    std::uint64_t next = 1 + cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Tree min_avl(int rank, KeySequence& keys) {
  Tree t;
  t.set_root(emit_min(t, rank, keys));
  return t;
}

Tree min_avl(int rank) {
  KeySequence keys;
  return min_avl(rank, keys);
}

Tree perfect_tree(int rank, KeySequence& keys) {
  Tree t;
  t.set_root(emit_perfect(t, rank, keys));
  return t;
}

Tree gen_expensive(int rank, EType etype, BPolicy policy) {
  if (rank < 0 || rank % 2 != 0) {
    throw OddRank("rank must be even and non-negative, got " + std::to_string(rank));
  }
  Tree t;
  KeySequence keys;
  t.set_root(emit_expensive(t, rank, etype, policy, keys));
  return t;
}

std::uint64_t expensive_size(int rank, BPolicy policy) {
  if (rank < 0 || rank % 2 != 0) {
    throw OddRank("rank must be even and non-negative, got " + std::to_string(rank));
  }
  if (rank == 0) return 1;
  const int b_rank = rank - 3;
  const std::uint64_t b = policy == BPolicy::MinimalAVL
                              ? min_avl_size(b_rank)
                              : (b_rank < 0 ? 0 : (std::uint64_t{1} << (b_rank + 1)) - 1);
  return 2 * expensive_size(rank - 2, policy) + b + 2;
}

EClassification classify_expensive(const Tree& tree, Handle h) {
  EClassification out;
  out.rank = tree.rank_of(h);
  if (h == kNil) return out;
  if (out.rank == 0) {
    out.member = tree.is_leaf(h);
    return out;
  }
  if (out.rank < 2 || out.rank % 2 != 0) return out;

  const int k = out.rank - 2;
  Handle l = tree.left(h);
  Handle r = tree.right(h);
  Handle a = kNil, b = kNil, c = kNil;
  if (is_rank(tree, l, k + 1) && is_rank(tree, r, k)) {
    out.etype = EType::L;
    a = tree.left(l);
    b = tree.right(l);
    c = r;
  } else if (is_rank(tree, l, k) && is_rank(tree, r, k + 1)) {
    out.etype = EType::R;
    a = l;
    b = tree.left(r);
    c = tree.right(r);
  } else {
    return out;
  }
  EClassification ca = classify_expensive(tree, a);
  EClassification cc = classify_expensive(tree, c);
  out.member = ca.member && cc.member && is_rank(tree, b, k - 1) && ca.rank == k && cc.rank == k;
  out.parts.push_back(std::move(ca));
  out.parts.push_back(std::move(cc));
  if (!out.member) out.etype.reset();
  return out;
}

EClassification classify_expensive(const Tree& tree) {
  return classify_expensive(tree, tree.root());
}

Key shallow_leaf(const Tree& tree) {
  if (!classify_expensive(tree).member) throw NotExpensive("tree is not in E");
  Handle h = tree.root();
  while (!tree.is_leaf(h)) {
    Handle next = kNil;
    for (Handle c : {tree.left(h), tree.right(h)}) {
      if (c != kNil && tree.rank_of(h) - tree.rank_of(c) == 2) next = c;
    }
    if (next == kNil) {
      throw NotExpensive("no 2-child below key " + to_string(tree.node(h).key));
    }
    h = next;
  }
  return tree.node(h).key;
}

std::vector<std::string> PairReport::deviations() const {
  std::vector<std::string> out;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  };
  const int k = rank_before;
  const auto half = static_cast<std::uint64_t>(k / 2);
  check(delete_counters.single_rotations == half,
        "delete single rotations " + std::to_string(delete_counters.single_rotations) +
            " != " + std::to_string(half));
  check(delete_counters.double_rotations == 0,
        "delete double rotations " + std::to_string(delete_counters.double_rotations));
  check(delete_counters.demotions == 0,
        "delete demotions " + std::to_string(delete_counters.demotions));
  check(delete_counters.steps == half, "delete fired " +
                                           std::to_string(delete_counters.steps) +
                                           " cases, expected " + std::to_string(half));
  check(rank_after_delete == k - 1, "rank after delete " + std::to_string(rank_after_delete) +
                                        " != " + std::to_string(k - 1));
  check(insert_counters.promotions == static_cast<std::uint64_t>(k),
        "reinsert promotions " + std::to_string(insert_counters.promotions) +
            " != " + std::to_string(k));
  check(insert_counters.rotations_total() == 0,
        "reinsert rotations " + std::to_string(insert_counters.rotations_total()));
  check(insert_counters.steps == static_cast<std::uint64_t>(k),
        "reinsert fired " + std::to_string(insert_counters.steps) + " cases, expected " +
            std::to_string(k));
  check(still_member, "result is not in E");
  if (k >= 2) {
    check(etype_before && etype_after && *etype_after != *etype_before,
          "top-level type did not flip");
  }
  return out;
}

PairReport delete_reinsert_pair(Tree& tree) {
  const EClassification before = classify_expensive(tree);
  if (!before.member) throw NotExpensive("tree is not in E");

  PairReport rep;
  rep.rank_before = before.rank;
  rep.etype_before = before.etype;

  const Key leaf = shallow_leaf(tree);
  OpResult del = tree.remove(leaf);
  rep.delete_counters = del.counters;
  rep.delete_trace = std::move(del.trace);
  rep.rank_after_delete = tree.rank();

  OpResult ins = tree.insert(leaf);
  rep.insert_counters = ins.counters;
  rep.insert_trace = std::move(ins.trace);

  const EClassification after = classify_expensive(tree);
  rep.still_member = after.member;
  rep.etype_after = after.etype;
  return rep;
}

std::vector<PairReport> run_pairs(Tree& tree, std::size_t count) {
  std::vector<PairReport> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(delete_reinsert_pair(tree));
  return out;
}

std::size_t period(Tree& tree, std::size_t cap) {
  const Tree start = tree;
  for (std::size_t p = 1; p <= cap; ++p) {
    delete_reinsert_pair(tree);
    if (structural_equal(tree, start)) return p;
  }
  tree = start;
  throw CapExceeded("no return to the starting tree within " + std::to_string(cap) + " pairs");
}

}  // namespace avlrank
