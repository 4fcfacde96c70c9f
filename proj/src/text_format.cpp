#include "avlrank/tree.hpp"

#include <charconv>
#include <sstream>

namespace avlrank {

namespace {

void write(const Tree& t, Handle h, std::string& out) {
  if (h == kNil) {
    out += '-';
    return;
  }
  const Node& n = t.node(h);
  out += '(';
  out += std::to_string(n.key.value);
  out += ';';
  out += std::to_string(n.rank);
  out += ' ';
  write(t, n.left, out);
  out += ' ';
  write(t, n.right, out);
  out += ')';
}

// Recursive-descent reader for the canonical grammar.
class Reader {
 public:
  Reader(std::string_view text, Tree& tree) : s_(text), tree_(tree) {}

  Handle subtree() {
    if (pos_ >= s_.size()) fail("unexpected end of input, expected '-' or '('");
    if (s_[pos_] == '-') {
      ++pos_;
      return kNil;
    }
    expect('(');
    const auto key = number<std::uint64_t>("key");
    expect(';');
    const auto rank = number<int>("rank");
    expect(' ');
    Handle h = tree_.add_node(Key{key}, rank);
    Handle l = subtree();
    expect(' ');
    Handle r = subtree();
    expect(')');
    tree_.set_children(h, l, r);
    return h;
  }

  void finish() {
    if (pos_ < s_.size() && s_[pos_] == '\n') ++pos_;
    if (pos_ != s_.size()) fail("trailing characters");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  template <typename T>
  T number(const char* what) {
    T v{};
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    if (first == last || *first < '0' || *first > '9') fail(std::string("expected ") + what);
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{}) fail(std::string(what) + " out of range");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::string_view s_;
  Tree& tree_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize(const Tree& tree) {
  std::string out;
  write(tree, tree.root(), out);
  return out;
}

Tree parse_tree(std::string_view text) {
  Tree tree;
  Reader reader(text, tree);
  Handle root = reader.subtree();
  reader.finish();
  tree.set_root(root);
  return tree;
}

Tree deserialize(std::string_view text) {
  Tree tree = parse_tree(text);
  ValidationReport report = validate(tree);
  if (!report.ok()) throw ValidationError(std::move(report));
  return tree;
}

std::string to_dot(const Tree& tree) {
  std::ostringstream os;
  os << "digraph avl {\n";
  std::vector<Handle> stack;
  if (!tree.empty()) stack.push_back(tree.root());
  // Pre-order: every node line precedes the edges out of it.
  while (!stack.empty()) {
    Handle h = stack.back();
    stack.pop_back();
    const Node& n = tree.node(h);
    os << "  n" << n.key << " [label=\"" << n.key << ':' << n.rank << "\"];\n";
    for (Handle c : {n.left, n.right}) {
      if (c == kNil) continue;
      os << "  n" << n.key << " -> n" << tree.node(c).key << " [label=\""
         << n.rank - tree.node(c).rank << "\"];\n";
    }
    if (n.right != kNil) stack.push_back(n.right);
    if (n.left != kNil) stack.push_back(n.left);
  }
  os << "}\n";
  return os.str();
}

}  // namespace avlrank
