#include "avlrank/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <utility>

namespace avlrank::oracle {

namespace {

// Height of h, or -2 once an imbalance has been found below it.
int balanced_height(const Tree& t, Handle h) {
  if (h == kNil) return -1;
  const int l = balanced_height(t, t.left(h));
  if (l == -2) return -2;
  const int r = balanced_height(t, t.right(h));
  if (r == -2) return -2;
  if (std::abs(l - r) > 1) return -2;
  return 1 + std::max(l, r);
}

// Shape-only trees shared between catalog entries while enumerating.
struct Shape {
  std::shared_ptr<const Shape> left, right;
  int height = 0;
};
using ShapePtr = std::shared_ptr<const Shape>;

Handle materialize(const ShapePtr& s, Tree& t, std::uint64_t& next_key) {
  if (!s) return kNil;
  Handle l = materialize(s->left, t, next_key);
  Handle h = t.add_node(Key{next_key++}, s->height);
  Handle r = materialize(s->right, t, next_key);
  t.set_children(h, l, r);
  return h;
}

}  // namespace

bool is_height_balanced(const Tree& tree) {
  return balanced_height(tree, tree.root()) != -2;
}

ShapeCatalog enumerate_avl_shapes(int n) {
  if (n < 0 || n > kMaxEnumeratedNodes) {
    throw BoundExceeded("shape enumeration supports 0..14 nodes, got " + std::to_string(n));
  }
  // shapes(nodes, height), built bottom-up over node counts.
  std::map<std::pair<int, int>, std::vector<ShapePtr>> memo;
  memo[{0, -1}] = {nullptr};
  for (int m = 1; m <= n; ++m) {
    for (int ls = 0; ls < m; ++ls) {
      const int rs = m - 1 - ls;
      for (const auto& [lkey, lshapes] : memo) {
        if (lkey.first != ls) continue;
        for (const auto& [rkey, rshapes] : memo) {
          if (rkey.first != rs) continue;
          if (std::abs(lkey.second - rkey.second) > 1) continue;
          const int ht = 1 + std::max(lkey.second, rkey.second);
          auto& out = memo[{m, ht}];
          for (const auto& a : lshapes) {
            for (const auto& b : rshapes) {
              out.push_back(std::make_shared<const Shape>(Shape{a, b, ht}));
            }
          }
        }
      }
    }
  }

  ShapeCatalog cat;
  cat.node_count = n;
  for (const auto& [key, shapes] : memo) {
    if (key.first != n) continue;
    for (const auto& s : shapes) {
      Tree t;
      std::uint64_t next = 1;
      t.set_root(materialize(s, t, next));
      cat.shapes.push_back(std::move(t));
    }
  }
  return cat;
}

// ---------------------------------------------------------------------------
// ClassicAvl
// ---------------------------------------------------------------------------

struct ClassicAvl::Node {
  Key key;
  int height = 0;
  Link left, right;
};

ClassicAvl::ClassicAvl(const ClassicAvl& other)
    : root_(clone(other.root_)), size_(other.size_), rotations_(other.rotations_) {}

ClassicAvl& ClassicAvl::operator=(const ClassicAvl& other) {
  if (this != &other) {
    root_ = clone(other.root_);
    size_ = other.size_;
    rotations_ = other.rotations_;
  }
  return *this;
}

ClassicAvl::ClassicAvl() = default;
ClassicAvl::ClassicAvl(ClassicAvl&&) noexcept = default;
ClassicAvl& ClassicAvl::operator=(ClassicAvl&&) noexcept = default;
ClassicAvl::~ClassicAvl() = default;

ClassicAvl::Link ClassicAvl::clone(const Link& n) {
  if (!n) return nullptr;
  auto c = std::make_unique<Node>();
  c->key = n->key;
  c->height = n->height;
  c->left = clone(n->left);
  c->right = clone(n->right);
  return c;
}

int ClassicAvl::h(const Link& n) { return n ? n->height : -1; }

void ClassicAvl::update(Node& n) { n.height = 1 + std::max(h(n.left), h(n.right)); }

void ClassicAvl::rotate_right(Link& n) {
  ++rotations_;
  Link l = std::move(n->left);
  n->left = std::move(l->right);
  update(*n);
  l->right = std::move(n);
  update(*l);
  n = std::move(l);
}

void ClassicAvl::rotate_left(Link& n) {
  ++rotations_;
  Link r = std::move(n->right);
  n->right = std::move(r->left);
  update(*n);
  r->left = std::move(n);
  update(*r);
  n = std::move(r);
}

void ClassicAvl::balance(Link& n) {
  update(*n);
  const int bf = h(n->left) - h(n->right);
  if (bf > 1) {
    if (h(n->left->left) < h(n->left->right)) rotate_left(n->left);
    rotate_right(n);
  } else if (bf < -1) {
    if (h(n->right->right) < h(n->right->left)) rotate_right(n->right);
    rotate_left(n);
  }
}

void ClassicAvl::insert(Link& n, Key k) {
  if (!n) {
    n = std::make_unique<Node>();
    n->key = k;
    return;
  }
  if (k == n->key) throw DuplicateKey(k);
  insert(k < n->key ? n->left : n->right, k);
  balance(n);
}

void ClassicAvl::remove(Link& n, Key k) {
  if (!n) throw KeyNotFound(k);
  if (k < n->key) {
    remove(n->left, k);
  } else if (n->key < k) {
    remove(n->right, k);
  } else if (n->left && n->right) {
    Node* succ = n->right.get();
    while (succ->left) succ = succ->left.get();
    n->key = succ->key;
    remove(n->right, succ->key);
  } else {
    n = std::move(n->left ? n->left : n->right);
    return;
  }
  balance(n);
}

void ClassicAvl::insert(Key k) {
  insert(root_, k);
  ++size_;
}

void ClassicAvl::remove(Key k) {
  remove(root_, k);
  --size_;
}

bool ClassicAvl::contains(Key k) const {
  const Node* n = root_.get();
  while (n) {
    if (k == n->key) return true;
    n = k < n->key ? n->left.get() : n->right.get();
  }
  return false;
}

std::vector<Key> ClassicAvl::keys() const {
  std::vector<Key> out;
  std::function<void(const Node*)> walk = [&](const Node* n) {
    if (!n) return;
    walk(n->left.get());
    out.push_back(n->key);
    walk(n->right.get());
  };
  walk(root_.get());
  return out;
}

Tree ClassicAvl::to_tree() const {
  Tree t;
  std::function<Handle(const Node*)> copy = [&](const Node* n) -> Handle {
    if (!n) return kNil;
    Handle x = t.add_node(n->key, n->height);
    Handle l = copy(n->left.get());
    Handle r = copy(n->right.get());
    t.set_children(x, l, r);
    return x;
  };
  t.set_root(copy(root_.get()));
  return t;
}

ClassicAvl ClassicAvl::from_tree(const Tree& tree) {
  ClassicAvl out;
  std::function<Link(Handle)> copy = [&](Handle x) -> Link {
    if (x == kNil) return nullptr;
    auto n = std::make_unique<Node>();
    n->key = tree.node(x).key;
    n->left = copy(tree.left(x));
    n->right = copy(tree.right(x));
    update(*n);
    ++out.size_;
    return n;
  };
  out.root_ = copy(tree.root());
  return out;
}

}  // namespace avlrank::oracle
