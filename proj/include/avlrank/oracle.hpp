#pragma once

// Independent verification machinery. Nothing here uses the rank-based
// rebalancing in tree.cpp: heights are recomputed or stored per node and
// balance is restored by the classic balance-factor rules.

#include <cstdint>
#include <memory>
#include <vector>

#include "avlrank/tree.hpp"

namespace avlrank::oracle {

/// True iff every node's subtree heights differ by at most one. Ranks are
/// ignored; heights are recomputed from scratch.
bool is_height_balanced(const Tree& tree);

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMaxEnumeratedNodes = 14;

struct ShapeCatalog {
  int node_count = 0;
  std::vector<Tree> shapes;
};

/// Every AVL shape on n nodes, keys 1..n in order and ranks set to heights.
/// Throws BoundExceeded for n outside [0, 14].
ShapeCatalog enumerate_avl_shapes(int n);

/// Textbook AVL tree with stored heights and balance factors.
class ClassicAvl {
 public:
  ClassicAvl();
  ClassicAvl(const ClassicAvl& other);
  ClassicAvl& operator=(const ClassicAvl& other);
  ClassicAvl(ClassicAvl&&) noexcept;
  ClassicAvl& operator=(ClassicAvl&&) noexcept;
  ~ClassicAvl();

  void insert(Key k);  // throws DuplicateKey
  void remove(Key k);  // throws KeyNotFound; binary nodes take the successor's key

  bool contains(Key k) const;
  std::size_t size() const { return size_; }
  std::vector<Key> keys() const;

  /// Same shape with ranks taken from the stored heights.
  Tree to_tree() const;

  /// Adopts the shape and keys of `tree`; heights are recomputed.
  static ClassicAvl from_tree(const Tree& tree);

  /// Single rotations performed so far (a double rotation counts two).
  std::uint64_t rotations() const { return rotations_; }

 private:
  struct Node;
  using Link = std::unique_ptr<Node>;

  static int h(const Link& n);
  static void update(Node& n);
  static Link clone(const Link& n);
  void rotate_right(Link& n);
  void rotate_left(Link& n);
  void balance(Link& n);
  void insert(Link& n, Key k);
  void remove(Link& n, Key k);

  Link root_;
  std::size_t size_ = 0;
  std::uint64_t rotations_ = 0;
};

}  // namespace avlrank::oracle
