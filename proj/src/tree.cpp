#include "avlrank/tree.hpp"

#include <cassert>
#include <ostream>
#include <utility>

namespace avlrank {

std::ostream& operator<<(std::ostream& os, Key k) { return os << k.value; }

std::string to_string(Key k) { return std::to_string(k.value); }

std::string_view to_string(Case c) {
  switch (c) {
    case Case::InsPromote: return "InsPromote";
    case Case::InsSingle: return "InsSingle";
    case Case::InsDouble: return "InsDouble";
    case Case::DelDemote: return "DelDemote";
    case Case::DelSingleStop: return "DelSingleStop";
    case Case::DelSingleRepeat: return "DelSingleRepeat";
    case Case::DelDouble: return "DelDouble";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, Case c) { return os << to_string(c); }

namespace {

void record(OpResult& res, Case c) {
  res.trace.push_back(c);
  ++res.counters.steps;
  switch (c) {
    case Case::InsPromote: ++res.counters.promotions; break;
    case Case::DelDemote: ++res.counters.demotions; break;
    case Case::InsSingle:
    case Case::DelSingleStop:
    case Case::DelSingleRepeat: ++res.counters.single_rotations; break;
    case Case::InsDouble:
    case Case::DelDouble: ++res.counters.double_rotations; break;
  }
}

constexpr Direction opposite(Direction d) {
  return d == Direction::Left ? Direction::Right : Direction::Left;
}

}  // namespace

Handle Tree::find(Key k) const {
  Handle h = root_;
  while (h != kNil) {
    const Node& n = nodes_[h];
    if (k < n.key) {
      h = n.left;
    } else if (n.key < k) {
      h = n.right;
    } else {
      return h;
    }
  }
  return kNil;
}

std::vector<Key> Tree::keys() const {
  std::vector<Key> out;
  out.reserve(size());
  std::vector<Handle> stack;
  Handle h = root_;
  while (h != kNil || !stack.empty()) {
    while (h != kNil) {
      stack.push_back(h);
      h = nodes_[h].left;
    }
    h = stack.back();
    stack.pop_back();
    out.push_back(nodes_[h].key);
    h = nodes_[h].right;
  }
  return out;
}

Handle Tree::add_node(Key k, int rank) {
  Node n;
  n.key = k;
  n.rank = rank;
  if (!free_.empty()) {
    Handle h = free_.back();
    free_.pop_back();
    nodes_[h] = n;
    return h;
  }
  nodes_.push_back(n);
  return static_cast<Handle>(nodes_.size() - 1);
}

void Tree::set_children(Handle h, Handle l, Handle r) {
  nodes_[h].left = l;
  nodes_[h].right = r;
  if (l != kNil) nodes_[l].parent = h;
  if (r != kNil) nodes_[r].parent = h;
}

void Tree::set_root(Handle h) {
  root_ = h;
  if (h != kNil) nodes_[h].parent = kNil;
}

void Tree::release(Handle h) {
  nodes_[h] = Node{};
  free_.push_back(h);
  if (free_.size() == nodes_.size()) {
    nodes_.clear();
    free_.clear();
  }
}

void Tree::replace_child(Handle parent, Handle old_child, Handle new_child) {
  if (parent == kNil) {
    root_ = new_child;
  } else if (nodes_[parent].left == old_child) {
    nodes_[parent].left = new_child;
  } else {
    assert(nodes_[parent].right == old_child);
    nodes_[parent].right = new_child;
  }
  if (new_child != kNil) nodes_[new_child].parent = parent;
}

void Tree::rotate(Handle x, Direction dir) {
  if (x == kNil) throw MissingChild("rotation at a missing node");
  // Right rotation at x: y = x.left moves up, y.right becomes x.left.
  const bool right = dir == Direction::Right;
  Handle y = right ? nodes_[x].left : nodes_[x].right;
  if (y == kNil) {
    throw MissingChild(std::string(right ? "right" : "left") + " rotation at key " +
                       to_string(nodes_[x].key) + " needs a " + (right ? "left" : "right") +
                       " child");
  }
  Handle middle = right ? nodes_[y].right : nodes_[y].left;
  Handle up = nodes_[x].parent;

  if (right) {
    nodes_[x].left = middle;
    nodes_[y].right = x;
  } else {
    nodes_[x].right = middle;
    nodes_[y].left = x;
  }
  if (middle != kNil) nodes_[middle].parent = x;
  nodes_[x].parent = y;
  replace_child(up, x, y);
}

OpResult Tree::insert(Key k) {
  OpResult res;
  if (root_ == kNil) {
    root_ = add_node(k, 0);
    return res;
  }
  Handle p = root_;
  for (;;) {
    Node& n = nodes_[p];
    if (k == n.key) throw DuplicateKey(k);
    Handle next = k < n.key ? n.left : n.right;
    if (next == kNil) break;
    p = next;
  }
  Handle x = add_node(k, 0);
  if (k < nodes_[p].key) {
    nodes_[p].left = x;
  } else {
    nodes_[p].right = x;
  }
  nodes_[x].parent = p;
  rebalance_after_insert(x, res);
  return res;
}

void Tree::rebalance_after_insert(Handle x, OpResult& res) {
  // Loop invariant: the only possible violation is x being a 0-child.
  for (;;) {
    Handle p = nodes_[x].parent;
    if (p == kNil || nodes_[p].rank != nodes_[x].rank) return;

    const bool x_left = nodes_[p].left == x;
    Handle sibling = x_left ? nodes_[p].right : nodes_[p].left;
    if (nodes_[p].rank - rank_of(sibling) == 1) {
      // p is 0,1
      promote(p);
      record(res, Case::InsPromote);
      x = p;
      continue;
    }

    // p is 0,2 and x is 1,2.
    assert(nodes_[p].rank - rank_of(sibling) == 2);
    const Direction down = x_left ? Direction::Right : Direction::Left;
    Handle inner = x_left ? nodes_[x].right : nodes_[x].left;
    if (nodes_[x].rank - rank_of(inner) == 2) {
      rotate(p, down);
      demote(p);
      record(res, Case::InsSingle);
    } else {
      rotate(x, opposite(down));
      rotate(p, down);
      promote(inner);
      demote(x);
      demote(p);
      record(res, Case::InsDouble);
    }
    return;
  }
}

OpResult Tree::remove(Key k) {
  Handle h = find(k);
  if (h == kNil) throw KeyNotFound(k);

  if (nodes_[h].left != kNil && nodes_[h].right != kNil) {
    Handle succ = nodes_[h].right;
    while (nodes_[succ].left != kNil) succ = nodes_[succ].left;
    // Positions keep their ranks; only the keys trade places.
    std::swap(nodes_[h].key, nodes_[succ].key);
    h = succ;
  }

  Handle child = nodes_[h].left != kNil ? nodes_[h].left : nodes_[h].right;
  Handle p = nodes_[h].parent;
  replace_child(p, h, child);
  release(h);

  OpResult res;
  rebalance_after_remove(p, res);
  return res;
}

void Tree::rebalance_after_remove(Handle p, OpResult& res) {
  while (p != kNil) {
    const int dl = nodes_[p].rank - rank_of(nodes_[p].left);
    const int dr = nodes_[p].rank - rank_of(nodes_[p].right);
    if (dl <= 2 && dr <= 2 && (dl == 1 || dr == 1)) return;

    if (dl == 2 && dr == 2) {
      demote(p);
      record(res, Case::DelDemote);
      p = nodes_[p].parent;
      continue;
    }

    // p is 1,3. The sibling y of the 3-child was a 1-child of a valid node,
    // so y is 1,1 or 1,2; a 2,2 sibling cannot occur.
    assert((dl == 3 && dr == 1) || (dl == 1 && dr == 3));
    const bool short_left = dl == 3;
    const Direction up = short_left ? Direction::Left : Direction::Right;
    Handle y = short_left ? nodes_[p].right : nodes_[p].left;
    Handle outer = short_left ? nodes_[y].right : nodes_[y].left;
    Handle inner = short_left ? nodes_[y].left : nodes_[y].right;
    const int d_outer = nodes_[y].rank - rank_of(outer);
    const int d_inner = nodes_[y].rank - rank_of(inner);

    if (d_outer == 1 && d_inner == 1) {
      rotate(p, up);
      promote(y);
      demote(p);
      record(res, Case::DelSingleStop);
      return;
    }
    if (d_outer == 1 && d_inner == 2) {
      rotate(p, up);
      demote(p, 2);
      record(res, Case::DelSingleRepeat);
      p = nodes_[y].parent;
      continue;
    }
    if (!(d_outer == 2 && d_inner == 1)) throw std::logic_error("unreachable deletion case");
    rotate(y, opposite(up));
    rotate(p, up);
    promote(inner);
    demote(y);
    demote(p, 2);
    record(res, Case::DelDouble);
    p = nodes_[inner].parent;
  }
}

}  // namespace avlrank
