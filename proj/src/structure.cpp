#include "avlrank/tree.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace avlrank {

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::KeyOrder: return "key-order";
    case ViolationKind::RankRule: return "rank-rule";
    case ViolationKind::RankHeight: return "rank-height";
    case ViolationKind::Structure: return "structure";
  }
  return "?";
}

std::string ValidationReport::to_string() const {
  if (violations.empty()) return "valid";
  std::ostringstream os;
  bool first = true;
  for (const auto& v : violations) {
    if (!first) os << "; ";
    first = false;
    os << avlrank::to_string(v.kind) << " at key " << v.key << ": " << v.detail;
  }
  return os.str();
}

namespace {

class Validator {
 public:
  explicit Validator(const Tree& t) : t_(t) {}

  ValidationReport run() {
    if (!t_.empty()) {
      if (t_.parent(t_.root()) != kNil) {
        add(ViolationKind::Structure, t_.root(), "root has a parent link");
      }
      visit(t_.root());
    }
    if (reached_ != t_.size()) {
      report_.violations.push_back(
          {ViolationKind::Structure, Key{}, "size " + std::to_string(t_.size()) +
                                                " but " + std::to_string(reached_) +
                                                " reachable nodes"});
    }
    return std::move(report_);
  }

 private:
  void add(ViolationKind kind, Handle h, std::string detail) {
    report_.violations.push_back({kind, t_.node(h).key, std::move(detail)});
  }

  // Returns the structural height of h.
  int visit(Handle h) {
    if (h == kNil) return -1;
    ++reached_;
    if (reached_ > t_.size()) {
      add(ViolationKind::Structure, h, "cycle or shared node");
      return 0;
    }
    const Node& n = t_.node(h);
    for (Handle c : {n.left, n.right}) {
      if (c != kNil && t_.parent(c) != h) {
        add(ViolationKind::Structure, c, "parent link does not point at its parent");
      }
    }

    const int hl = visit(n.left);
    if (last_key_ && !(*last_key_ < n.key)) {
      add(ViolationKind::KeyOrder, h,
          "follows key " + to_string(*last_key_) + " in symmetric order");
    }
    last_key_ = n.key;
    const int hr = visit(n.right);

    const int dl = n.rank - t_.rank_of(n.left);
    const int dr = n.rank - t_.rank_of(n.right);
    const bool rule = dl >= 1 && dl <= 2 && dr >= 1 && dr <= 2 && (dl == 1 || dr == 1);
    if (!rule) {
      add(ViolationKind::RankRule, h,
          "rank " + std::to_string(n.rank) + " is a " + std::to_string(std::min(dl, dr)) +
              "," + std::to_string(std::max(dl, dr)) + " node");
    }
    const int ht = 1 + std::max(hl, hr);
    if (n.rank != ht) {
      add(ViolationKind::RankHeight, h,
          "rank " + std::to_string(n.rank) + " but height " + std::to_string(ht));
    }
    return ht;
  }

  const Tree& t_;
  ValidationReport report_;
  std::optional<Key> last_key_;
  std::size_t reached_ = 0;
};

}  // namespace

ValidationReport validate(const Tree& tree) { return Validator(tree).run(); }

int height(const Tree& tree, Handle h) {
  if (h == kNil) return -1;
  return 1 + std::max(height(tree, tree.left(h)), height(tree, tree.right(h)));
}

namespace {

Handle copy_into(const Tree& src, Handle h, Tree& dst, bool drop_leaves) {
  if (h == kNil) return kNil;
  if (drop_leaves && src.is_leaf(h)) return kNil;
  const Node& n = src.node(h);
  Handle out = dst.add_node(n.key, drop_leaves ? n.rank - 1 : n.rank);
  Handle l = copy_into(src, n.left, dst, drop_leaves);
  Handle r = copy_into(src, n.right, dst, drop_leaves);
  dst.set_children(out, l, r);
  return out;
}

}  // namespace

Tree truncate(const Tree& tree) {
  if (tree.empty()) throw EmptyTree("cannot truncate the empty tree");
  Tree out;
  out.set_root(copy_into(tree, tree.root(), out, true));
  return out;
}

Tree copy_subtree(const Tree& tree, Handle h) {
  Tree out;
  out.set_root(copy_into(tree, h, out, false));
  return out;
}

bool structural_equal(const Tree& a, Handle ha, const Tree& b, Handle hb) {
  if (ha == kNil || hb == kNil) return ha == hb;
  const Node& x = a.node(ha);
  const Node& y = b.node(hb);
  return x.key == y.key && x.rank == y.rank && structural_equal(a, x.left, b, y.left) &&
         structural_equal(a, x.right, b, y.right);
}

bool structural_equal(const Tree& a, const Tree& b) {
  return a.size() == b.size() && structural_equal(a, a.root(), b, b.root());
}

}  // namespace avlrank
