#ifndef COMPACTA_COMPACTION_HPP
#define COMPACTA_COMPACTION_HPP

// Hash-consing of binary trees (value numbering) and the inverse unfolding.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "compacta/tree.hpp"

namespace compacta {

using uid = std::uint32_t;

/// Triple -> uid associations in discovery order. uid 0 is the nil leaf and
/// never appears as a row.
class uid_table {
 public:
  struct row {
    std::string label;  // empty for unlabeled nodes
    uid left = 0;
    uid right = 0;
    uid id = 0;
    friend bool operator==(const row&, const row&) = default;
  };

  /// Returns the uid of the triple and whether it was freshly assigned.
  std::pair<uid, bool> intern(const std::string& label, uid l, uid r) {
    key k{label, l, r};
    if (auto it = index_.find(k); it != index_.end()) return {it->second, false};
    uid fresh = ++counter_;
    index_.emplace(std::move(k), fresh);
    rows_.push_back({label, l, r, fresh});
    return {fresh, true};
  }

  std::optional<uid> lookup(const std::string& label, uid l, uid r) const {
    auto it = index_.find(key{label, l, r});
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<row>& rows() const noexcept { return rows_; }
  uid counter() const noexcept { return counter_; }
  std::size_t size() const noexcept { return rows_.size(); }

  /// CSV with header label,uid_left,uid_right,uid.
  void write_csv(std::ostream& os) const {
    os << "label,uid_left,uid_right,uid\n";
    for (const auto& r : rows_) os << r.label << ',' << r.left << ',' << r.right << ',' << r.id << '\n';
  }

 private:
  struct key {
    std::string label;
    uid l, r;
    bool operator==(const key&) const = default;
  };
  struct key_hash {
    std::size_t operator()(const key& k) const noexcept {
      std::size_t h = std::hash<std::string>{}(k.label);
      std::uint64_t lr = (std::uint64_t{k.l} << 32) | k.r;
      return h ^ (std::hash<std::uint64_t>{}(lr) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
  };

  std::unordered_map<key, uid, key_hash> index_;
  std::vector<row> rows_;
  uid counter_ = 0;
};

struct compaction_result {
  relaxed_dag dag;
  uid_table table;
};

/// Runs the UID procedure over `t` in post-order. The first occurrence of
/// every distinct subtree becomes a spine node whose post-order index equals
/// its uid; every later occurrence becomes a pointer to it.
inline compaction_result uid_compact(const binary_tree& t) {
  compaction_result res;
  std::vector<dag_node> nodes;
  std::unordered_map<const binary_tree::node*, uid> seen;

  // Returns the slot by which the parent refers to this subtree.
  auto visit = [&](auto&& self, const binary_tree::node* p) -> slot {
    if (!p) return slot::pointer(0);
    if (auto it = seen.find(p); it != seen.end()) return slot::pointer(it->second);
    slot l = self(self, p->left.get());
    slot r = self(self, p->right.get());
    auto [id, fresh] = res.table.intern(p->label, l.index, r.index);
    seen.emplace(p, id);
    if (!fresh) return slot::pointer(id);
    nodes.push_back({l, r});
    return slot::child(id);
  };
  visit(visit, t.root());
  res.dag = relaxed_dag(std::move(nodes));
  return res;
}

/// Expands the subtree at post-order index `at` (0 = the leaf). Repeated
/// subtrees share storage in the result.
inline binary_tree unfold(const relaxed_dag& dag, post_order_index at) {
  if (at > dag.size()) throw std::out_of_range("unfold: index beyond dag size");
  std::vector<binary_tree> memo(at + 1);
  for (post_order_index v = 1; v <= at; ++v) {
    const auto& nd = dag.at(v);
    memo[v] = binary_tree::internal(memo.at(nd.left.index), memo.at(nd.right.index));
  }
  return memo[at];
}

inline binary_tree unfold(const relaxed_dag& dag) { return unfold(dag, dag.root()); }

struct duplicate_node {
  post_order_index node;     // receives a uid that already exists
  post_order_index same_as;  // the earlier node with the same unfolding
};

/// Value-numbers the spine nodes in post-order; reports the first node whose
/// (left uid, right uid) pair was already assigned.
inline std::optional<duplicate_node> first_duplicate(const relaxed_dag& dag) {
  const auto n = dag.size();
  std::vector<uid> id(n + 1, 0);
  uid_table table;
  for (post_order_index v = 1; v <= n; ++v) {
    const auto& nd = dag.at(v);
    auto [u, fresh] = table.intern({}, id[nd.left.index], id[nd.right.index]);
    if (!fresh) {
      for (post_order_index w = 1; w < v; ++w)
        if (id[w] == u) return duplicate_node{v, w};
    }
    id[v] = u;
  }
  return std::nullopt;
}

inline bool is_compacted(const relaxed_dag& dag) { return !first_duplicate(dag).has_value(); }

}  // namespace compacta

#endif  // COMPACTA_COMPACTION_HPP
