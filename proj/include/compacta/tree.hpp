#ifndef COMPACTA_TREE_HPP
#define COMPACTA_TREE_HPP

// Core data model: full binary trees, spines, and relaxed DAGs indexed by
// post-order position.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "compacta/error.hpp"

namespace compacta {

using post_order_index = std::uint32_t;

enum class side : std::uint8_t { left, right };

inline const char* to_string(side s) { return s == side::left ? "left" : "right"; }

enum class family : std::uint8_t { relaxed, compacted };

inline const char* to_string(family f) { return f == family::relaxed ? "relaxed" : "compacted"; }

inline std::optional<family> parse_family(std::string_view s) {
  if (s == "relaxed") return family::relaxed;
  if (s == "compacted") return family::compacted;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// binary_tree
// ---------------------------------------------------------------------------

/// Immutable full binary tree. The leaf (nil) is the empty handle; internal
/// nodes carry an optional label. Subtrees may be shared between parents,
/// which is how unfolded DAGs avoid exponential blow-up in memory.
class binary_tree {
 public:
  struct node {
    std::string label;
    std::shared_ptr<const node> left;
    std::shared_ptr<const node> right;
  };
  using node_ptr = std::shared_ptr<const node>;

  binary_tree() = default;

  static binary_tree leaf() { return binary_tree(); }

  static binary_tree internal(const binary_tree& l, const binary_tree& r, std::string label = {}) {
    return binary_tree(std::make_shared<const node>(node{std::move(label), l.root_, r.root_}));
  }

  bool is_leaf() const noexcept { return root_ == nullptr; }
  const node* root() const noexcept { return root_.get(); }
  const node_ptr& handle() const noexcept { return root_; }

  binary_tree left() const { return binary_tree(require_internal().left); }
  binary_tree right() const { return binary_tree(require_internal().right); }
  const std::string& label() const { return require_internal().label; }

  /// Number of internal nodes, counted with multiplicity.
  std::uint64_t size() const {
    std::unordered_map<const node*, std::uint64_t> memo;
    return size_of(root_.get(), memo);
  }

  friend bool operator==(const binary_tree& a, const binary_tree& b) {
    return equal(a.root_.get(), b.root_.get());
  }

  static binary_tree from_handle(node_ptr p) { return binary_tree(std::move(p)); }

 private:
  explicit binary_tree(node_ptr p) : root_(std::move(p)) {}

  const node& require_internal() const {
    if (!root_) throw std::logic_error("binary_tree: leaf has no children or label");
    return *root_;
  }

  static std::uint64_t size_of(const node* p, std::unordered_map<const node*, std::uint64_t>& memo) {
    if (!p) return 0;
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    std::uint64_t s = 1 + size_of(p->left.get(), memo) + size_of(p->right.get(), memo);
    memo.emplace(p, s);
    return s;
  }

  static bool equal(const node* a, const node* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->label == b->label && equal(a->left.get(), b->left.get()) &&
           equal(a->right.get(), b->right.get());
  }

  node_ptr root_;
};

namespace detail {

class sexp_reader {
 public:
  explicit sexp_reader(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string atom() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') break;
      ++pos_;
    }
    if (start == pos_) throw parse_error("expected an atom", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t pos() const noexcept { return pos_; }
  void advance() noexcept { ++pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline binary_tree parse_tree_rec(sexp_reader& in) {
  char c = in.peek();
  if (c == '.') {
    std::size_t at = in.pos();
    std::string a = in.atom();
    if (a != ".") throw parse_error("atoms may not start with '.'", at);
    return binary_tree::leaf();
  }
  if (c == '(') {
    in.advance();
    char d = in.peek();
    if (d == ')') throw parse_error("empty list", in.pos());
    if (d == '(' || d == '.') {
      auto l = parse_tree_rec(in);
      auto r = parse_tree_rec(in);
      in.expect(')');
      return binary_tree::internal(l, r);
    }
    std::size_t at = in.pos();
    std::string label = in.atom();
    if (label.front() == '@') throw parse_error("pointer slot in a tree", at);
    auto l = parse_tree_rec(in);
    auto r = parse_tree_rec(in);
    in.expect(')');
    return binary_tree::internal(l, r, std::move(label));
  }
  if (c == ')') throw parse_error("unexpected ')'", in.pos());
  std::size_t at = in.pos();
  std::string label = in.atom();
  if (label.front() == '@') throw parse_error("pointer slot in a tree", at);
  // A bare atom is a labeled node whose children are both nil.
  return binary_tree::internal(binary_tree::leaf(), binary_tree::leaf(), std::move(label));
}

inline void print_tree(const binary_tree::node* p, std::string& out) {
  if (!p) {
    out += '.';
    return;
  }
  if (!p->label.empty() && !p->left && !p->right) {
    out += p->label;
    return;
  }
  out += '(';
  if (!p->label.empty()) {
    out += p->label;
    out += ' ';
  }
  print_tree(p->left.get(), out);
  out += ' ';
  print_tree(p->right.get(), out);
  out += ')';
}

}  // namespace detail

/// Parses `tree := "." | "(" tree " " tree ")"`, and the labeled variant
/// `atom | "(" atom " " tree " " tree ")"`, where a bare atom is a labeled
/// node with two nil children.
inline binary_tree parse_tree(std::string_view text) {
  detail::sexp_reader in(text);
  auto t = detail::parse_tree_rec(in);
  if (!in.at_end()) throw parse_error("trailing input", in.pos());
  return t;
}

inline std::string to_string(const binary_tree& t) {
  std::string out;
  detail::print_tree(t.root(), out);
  return out;
}

// ---------------------------------------------------------------------------
// spine_tree
// ---------------------------------------------------------------------------

/// Binary tree on n nodes numbered 1..n in post-order (root = n). Each node
/// has an optional left and an optional right child; 0 means absent.
class spine_tree {
 public:
  struct node {
    post_order_index left = 0;
    post_order_index right = 0;
    friend bool operator==(const node&, const node&) = default;
  };

  spine_tree() = default;

  explicit spine_tree(std::vector<node> nodes) : nodes_(std::move(nodes)) {
    if (!check_post_order()) throw std::invalid_argument("spine_tree: nodes are not numbered in post-order");
  }

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(nodes_.size()); }
  bool empty() const noexcept { return nodes_.empty(); }
  post_order_index root() const noexcept { return size(); }
  const node& at(post_order_index i) const { return nodes_.at(i - 1); }
  const std::vector<node>& nodes() const noexcept { return nodes_; }

  /// Smallest post-order index inside the subtree of i.
  std::vector<post_order_index> lows() const {
    std::vector<post_order_index> low(size() + 1, 0);
    for (post_order_index v = 1; v <= size(); ++v) {
      const auto& nd = at(v);
      low[v] = nd.left ? low[nd.left] : (nd.right ? low[nd.right] : v);
    }
    return low;
  }

  /// Number of right edges on the path from the root, per node (index 0 unused).
  std::vector<std::uint32_t> levels() const {
    std::vector<std::uint32_t> lv(size() + 1, 0);
    for (post_order_index v = size(); v >= 1; --v) {
      const auto& nd = at(v);
      if (nd.left) lv[nd.left] = lv[v];
      if (nd.right) lv[nd.right] = lv[v] + 1;
    }
    return lv;
  }

  /// Edge distance from the root, per node (index 0 unused).
  std::vector<std::uint32_t> depths() const {
    std::vector<std::uint32_t> d(size() + 1, 0);
    for (post_order_index v = size(); v >= 1; --v) {
      const auto& nd = at(v);
      if (nd.left) d[nd.left] = d[v] + 1;
      if (nd.right) d[nd.right] = d[v] + 1;
    }
    return d;
  }

  friend bool operator==(const spine_tree&, const spine_tree&) = default;

 private:
  bool check_post_order() const {
    if (nodes_.empty()) return true;
    for (post_order_index v = 1; v <= size(); ++v) {
      const auto& nd = at(v);
      if (nd.left >= v || nd.right >= v) return false;
      if (nd.left && nd.left == nd.right) return false;
    }
    post_order_index counter = 0;
    return visit(root(), counter) && counter == size();
  }

  bool visit(post_order_index v, post_order_index& counter) const {
    const auto& nd = at(v);
    if (nd.left && !visit(nd.left, counter)) return false;
    if (nd.right && !visit(nd.right, counter)) return false;
    return ++counter == v;
  }

  std::vector<node> nodes_;
};

/// Maximum number of right spine edges on any path from the root.
inline std::uint32_t right_height(const spine_tree& s) {
  if (s.empty()) return 0;
  auto lv = s.levels();
  return *std::max_element(lv.begin() + 1, lv.end());
}

inline std::string to_string(const spine_tree& s) {
  if (s.empty()) return "_";
  std::string out;
  auto rec = [&](auto&& self, post_order_index v) -> void {
    const auto& nd = s.at(v);
    out += '(';
    if (nd.left) self(self, nd.left); else out += '.';
    out += ' ';
    if (nd.right) self(self, nd.right); else out += '.';
    out += ')';
  };
  rec(rec, s.root());
  return out;
}

// ---------------------------------------------------------------------------
// relaxed_dag
// ---------------------------------------------------------------------------

/// A child slot of a spine node: either a spine edge to the child with the
/// given post-order index, or a pointer to a post-order index (0 = the leaf).
struct slot {
  enum class kind : std::uint8_t { spine, pointer };
  kind type = kind::pointer;
  post_order_index index = 0;

  static slot child(post_order_index i) { return {kind::spine, i}; }
  static slot pointer(post_order_index target) { return {kind::pointer, target}; }

  bool is_pointer() const noexcept { return type == kind::pointer; }
  bool is_spine() const noexcept { return type == kind::spine; }

  friend bool operator==(const slot&, const slot&) = default;
};

struct dag_node {
  slot left;
  slot right;

  const slot& operator[](side s) const noexcept { return s == side::left ? left : right; }
  slot& operator[](side s) noexcept { return s == side::left ? left : right; }

  friend bool operator==(const dag_node&, const dag_node&) = default;
};

/// Spine plus one leaf plus pointers. Node i (1-based) is the i-th spine node
/// completed by the post-order traversal; the root is node n. Construction
/// does not validate; use validate() on untrusted input.
class relaxed_dag {
 public:
  relaxed_dag() = default;
  explicit relaxed_dag(std::vector<dag_node> nodes) : nodes_(std::move(nodes)) {}

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(nodes_.size()); }
  post_order_index root() const noexcept { return size(); }
  const dag_node& at(post_order_index i) const { return nodes_.at(i - 1); }
  const std::vector<dag_node>& nodes() const noexcept { return nodes_; }

  void set(post_order_index i, side s, slot value) { nodes_.at(i - 1)[s] = value; }

  bool is_cherry(post_order_index i) const {
    const auto& nd = at(i);
    return nd.left.is_pointer() && nd.right.is_pointer();
  }

  std::uint32_t pointer_count() const noexcept {
    std::uint32_t c = 0;
    for (const auto& nd : nodes_) c += nd.left.is_pointer() + nd.right.is_pointer();
    return c;
  }

  /// The spine obtained by deleting the pointers and the leaf.
  spine_tree spine() const {
    std::vector<spine_tree::node> s(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].left.is_spine()) s[i].left = nodes_[i].left.index;
      if (nodes_[i].right.is_spine()) s[i].right = nodes_[i].right.index;
    }
    return spine_tree(std::move(s));
  }

  friend bool operator==(const relaxed_dag&, const relaxed_dag&) = default;

 private:
  std::vector<dag_node> nodes_;
};

/// A pointer slot as met by the post-order traversal, with the largest
/// legal target: every index in [0, max_target] is already discovered.
struct slot_visit {
  post_order_index node;
  compacta::side side;
  post_order_index max_target;
};

/// Pointer slots of a spine in traversal visit order. The same list applies
/// to any relaxed DAG built on this spine.
inline std::vector<slot_visit> pointer_slots(const spine_tree& s) {
  std::vector<slot_visit> out;
  if (s.empty()) return out;
  out.reserve(s.size() + 1);
  auto low = s.lows();
  auto rec = [&](auto&& self, post_order_index v) -> void {
    const auto& nd = s.at(v);
    if (nd.left) self(self, nd.left);
    else out.push_back({v, side::left, low[v] - 1});
    if (nd.right) self(self, nd.right);
    else out.push_back({v, side::right, v - 1});
  };
  rec(rec, s.root());
  return out;
}

/// Spine nodes in post-order, obtained by traversing from the root.
inline std::vector<post_order_index> post_order(const relaxed_dag& dag) {
  std::vector<post_order_index> out;
  if (dag.size() == 0) return out;
  out.reserve(dag.size());
  auto rec = [&](auto&& self, post_order_index v) -> void {
    const auto& nd = dag.at(v);
    if (nd.left.is_spine()) self(self, nd.left.index);
    if (nd.right.is_spine()) self(self, nd.right.index);
    out.push_back(v);
  };
  rec(rec, dag.root());
  return out;
}

inline std::uint32_t right_height(const relaxed_dag& dag) { return right_height(dag.spine()); }

struct violation {
  std::string what;
  post_order_index node = 0;
  std::optional<compacta::side> slot_side;

  std::string message() const {
    std::string m = what;
    if (node) {
      m += " (node " + std::to_string(node);
      if (slot_side) m += std::string(", ") + to_string(*slot_side) + " slot";
      m += ")";
    }
    return m;
  }
};

/// Checks every structural invariant of a relaxed DAG; returns the first
/// violation found, or nothing when the DAG is valid.
inline std::optional<violation> validate(const relaxed_dag& dag) {
  const std::uint32_t n = dag.size();
  std::vector<std::uint32_t> parents(n + 1, 0);
  for (post_order_index v = 1; v <= n; ++v) {
    for (side sd : {side::left, side::right}) {
      const slot& sl = dag.at(v)[sd];
      if (sl.is_spine()) {
        if (sl.index == 0 || sl.index >= v)
          return violation{"spine child must precede its parent in post-order", v, sd};
        if (++parents[sl.index] > 1) return violation{"spine node has two parents", sl.index, std::nullopt};
      }
    }
  }
  for (post_order_index v = 1; v < n; ++v)
    if (parents[v] == 0) return violation{"spine is disconnected", v, std::nullopt};

  spine_tree spine;
  try {
    spine = dag.spine();
  } catch (const std::invalid_argument&) {
    return violation{"spine is not numbered in post-order", 0, std::nullopt};
  }
  for (const auto& visit : pointer_slots(spine)) {
    const slot& sl = dag.at(visit.node)[visit.side];
    if (sl.index > visit.max_target) {
      std::string why = sl.index == visit.node
                            ? "pointer targets its own node"
                            : "pointer targets a node not yet discovered in post-order";
      return violation{why, visit.node, visit.side};
    }
  }
  if (n > 0 && dag.pointer_count() != n + 1)
    return violation{"expected n+1 pointer slots (one leaf and n pointers)", 0, std::nullopt};
  return std::nullopt;
}

inline std::string to_string(const relaxed_dag& dag) {
  if (dag.size() == 0) return "@0";
  std::string out;
  auto put_slot = [&](auto&& rec, const slot& s) -> void {
    if (s.is_pointer()) {
      out += '@';
      out += std::to_string(s.index);
    } else {
      rec(rec, s.index);
    }
  };
  auto rec = [&](auto&& self, post_order_index v) -> void {
    const auto& nd = dag.at(v);
    out += '(';
    put_slot(self, nd.left);
    out += ' ';
    put_slot(self, nd.right);
    out += ')';
  };
  rec(rec, dag.root());
  return out;
}

namespace detail {

inline slot parse_dag_item(sexp_reader& in, std::vector<dag_node>& nodes) {
  char c = in.peek();
  if (c == '@') {
    std::size_t at = in.pos();
    std::string a = in.atom();
    if (a.size() < 2 || !std::all_of(a.begin() + 1, a.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw parse_error("malformed pointer '" + a + "'", at);
    unsigned long long v = std::stoull(a.substr(1));
    if (v > 0xffffffffULL) throw parse_error("pointer target out of range", at);
    return slot::pointer(static_cast<post_order_index>(v));
  }
  if (c != '(') throw parse_error("expected '(' or '@i'", in.pos());
  in.advance();
  slot l = parse_dag_item(in, nodes);
  slot r = parse_dag_item(in, nodes);
  in.expect(')');
  nodes.push_back({l, r});
  return slot::child(static_cast<post_order_index>(nodes.size()));
}

}  // namespace detail

/// Parses the "@i" text form, e.g. "(@0 @0)" for the size-1 DAG and "@0" for
/// the bare leaf. Post-order indices are assigned as nodes close. Pointer
/// targets are not checked here; call validate().
inline relaxed_dag parse_dag(std::string_view text) {
  detail::sexp_reader in(text);
  std::vector<dag_node> nodes;
  slot top = detail::parse_dag_item(in, nodes);
  if (!in.at_end()) throw parse_error("trailing input", in.pos());
  if (top.is_pointer()) {
    if (top.index != 0) throw parse_error("a bare pointer must be @0 (the leaf)", 0);
    return relaxed_dag();
  }
  return relaxed_dag(std::move(nodes));
}

}  // namespace compacta

#endif  // COMPACTA_TREE_HPP
