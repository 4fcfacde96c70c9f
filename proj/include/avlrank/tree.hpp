#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace avlrank {

/// Node identity. Keys are dense unsigned integers, normally the node's
/// in-order position at construction time.
struct Key {
  std::uint64_t value = 0;

  constexpr Key() = default;
  constexpr explicit Key(std::uint64_t v) : value(v) {}
  friend constexpr auto operator<=>(Key, Key) = default;
};

std::ostream& operator<<(std::ostream& os, Key k);
std::string to_string(Key k);

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateKey : public Error {
 public:
  explicit DuplicateKey(Key k) : Error("duplicate key " + to_string(k)), key(k) {}
  Key key;
};

class KeyNotFound : public Error {
 public:
  explicit KeyNotFound(Key k) : Error("key not found " + to_string(k)), key(k) {}
  Key key;
};

class MissingChild : public Error {
 public:
  using Error::Error;
};

class EmptyTree : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Instrumentation
// ---------------------------------------------------------------------------

/// Rebalancing case labels. Ins* are the insertion cases (promote, single,
/// double); Del* the deletion cases. DelSingleStop is the single rotation
/// whose sibling was 1,1 (it terminates); DelSingleRepeat the one whose
/// sibling was 1,2 with an outer 1-child (the subtree shrinks, may repeat).
enum class Case : std::uint8_t {
  InsPromote,
  InsSingle,
  InsDouble,
  DelDemote,
  DelSingleStop,
  DelSingleRepeat,
  DelDouble,
};

inline constexpr std::size_t kCaseCount = 7;

std::string_view to_string(Case c);
std::ostream& operator<<(std::ostream& os, Case c);

using CaseTrace = std::vector<Case>;

/// Exact per-operation counts. Rank changes inside rotation cases are
/// attributed to the rotation, so `promotions` counts only InsPromote steps
/// and `demotions` only DelDemote steps.
struct RebalanceCounters {
  std::uint64_t promotions = 0;
  std::uint64_t demotions = 0;
  std::uint64_t single_rotations = 0;
  std::uint64_t double_rotations = 0;
  std::uint64_t steps = 0;

  /// Structural rotations: a double rotation is two of them.
  constexpr std::uint64_t rotations_total() const {
    return single_rotations + 2 * double_rotations;
  }

  RebalanceCounters& operator+=(const RebalanceCounters& o) {
    promotions += o.promotions;
    demotions += o.demotions;
    single_rotations += o.single_rotations;
    double_rotations += o.double_rotations;
    steps += o.steps;
    return *this;
  }

  friend bool operator==(const RebalanceCounters&, const RebalanceCounters&) = default;
};

struct OpResult {
  RebalanceCounters counters;
  CaseTrace trace;
};

// ---------------------------------------------------------------------------
// Tree
// ---------------------------------------------------------------------------

using Handle = std::uint32_t;
inline constexpr Handle kNil = std::numeric_limits<Handle>::max();

struct Node {
  Key key;
  int rank = 0;
  Handle left = kNil;
  Handle right = kNil;
  Handle parent = kNil;
};

enum class Direction { Left, Right };

/// Keyed ranked binary tree kept balanced by the rank-based AVL rules:
/// every node is 1,1 or 1,2, with missing children of rank -1.
///
/// Nodes live in an index pool; handles stay valid until the node is
/// removed. A Tree is a plain value: copy it to snapshot.
class Tree {
 public:
  Tree() = default;

  bool empty() const { return root_ == kNil; }
  std::size_t size() const { return nodes_.size() - free_.size(); }
  Handle root() const { return root_; }

  /// Rank of the root; -1 for the empty tree.
  int rank() const { return rank_of(root_); }
  int rank_of(Handle h) const { return h == kNil ? -1 : nodes_[h].rank; }

  const Node& node(Handle h) const { return nodes_[h]; }
  Handle left(Handle h) const { return nodes_[h].left; }
  Handle right(Handle h) const { return nodes_[h].right; }
  Handle parent(Handle h) const { return nodes_[h].parent; }
  bool is_leaf(Handle h) const { return left(h) == kNil && right(h) == kNil; }

  Handle find(Key k) const;
  bool contains(Key k) const { return find(k) != kNil; }

  /// In-order keys.
  std::vector<Key> keys() const;

  /// Inserts a new leaf of rank 0 and rebalances. Throws DuplicateKey
  /// with the tree unchanged.
  OpResult insert(Key k);

  /// Deletes the node holding `k` and rebalances. A binary node first trades
  /// places with its in-order successor. Throws KeyNotFound with the tree
  /// unchanged.
  OpResult remove(Key k);

  /// Right rotation at `h` lifts its left child; left rotation lifts its
  /// right child. Ranks are untouched. Throws MissingChild.
  void rotate(Handle h, Direction dir);

  // Unchecked construction. Used by parsers and generators; run validate()
  // on the result before relying on the AVL invariants.
  Handle add_node(Key k, int rank);
  void set_children(Handle h, Handle left, Handle right);
  void set_root(Handle h);

 private:
  void promote(Handle h) { ++nodes_[h].rank; }
  void demote(Handle h, int by = 1) { nodes_[h].rank -= by; }
  void replace_child(Handle parent, Handle old_child, Handle new_child);
  void release(Handle h);
  void rebalance_after_insert(Handle x, OpResult& res);
  void rebalance_after_remove(Handle p, OpResult& res);

  std::vector<Node> nodes_;
  std::vector<Handle> free_;
  Handle root_ = kNil;
};

// ---------------------------------------------------------------------------
// Validation and structure
// ---------------------------------------------------------------------------

enum class ViolationKind { KeyOrder, RankRule, RankHeight, Structure };

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  Key key;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks BST key order, the rank rule (child rank differences in {1,2},
/// missing = -1), rank == height at every node, and link consistency.
ValidationReport validate(const Tree& tree);

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport r)
      : Error("invalid AVL tree: " + r.to_string()), report(std::move(r)) {}
  ValidationReport report;
};

/// Height recomputed from structure alone; -1 for kNil.
int height(const Tree& tree, Handle h);

/// Deletes every leaf and decrements the remaining ranks. Throws EmptyTree.
Tree truncate(const Tree& tree);

/// Same shape, ranks and keys.
bool structural_equal(const Tree& a, const Tree& b);
bool structural_equal(const Tree& a, Handle ha, const Tree& b, Handle hb);

/// Copies the subtree rooted at `h` into a fresh tree.
Tree copy_subtree(const Tree& tree, Handle h);

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

/// tree := "-" | "(" key ";" rank " " tree " " tree ")"
std::string serialize(const Tree& tree);

class ParseError : public Error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : Error("parse error at offset " + std::to_string(pos) + ": " + what), position(pos) {}
  std::size_t position;
};

/// Parses the canonical format without checking AVL invariants. A single
/// trailing newline is accepted.
Tree parse_tree(std::string_view text);

/// parse_tree followed by validate; throws ValidationError on a non-AVL tree.
Tree deserialize(std::string_view text);

/// Graphviz DOT: one line per node labeled "key:rank", edges labeled with
/// their rank difference.
std::string to_dot(const Tree& tree);

}  // namespace avlrank
