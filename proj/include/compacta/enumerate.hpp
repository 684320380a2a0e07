#ifndef COMPACTA_ENUMERATE_HPP
#define COMPACTA_ENUMERATE_HPP

// Exhaustive generation of spines, relaxed and compacted trees, and the
// per-spine product count of relaxed trees.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "compacta/bigint.hpp"
#include "compacta/compaction.hpp"
#include "compacta/error.hpp"
#include "compacta/recurrences.hpp"
#include "compacta/tree.hpp"

namespace compacta {

struct gen_filter {
  std::uint32_t n = 0;
  std::optional<std::uint32_t> max_right_height;
  family kind = family::relaxed;

  bool admits(const spine_tree& s) const { return !max_right_height || right_height(s) <= *max_right_height; }
};

/// 10^8 unless COMPACTA_BUDGET holds a positive decimal integer.
inline integer default_budget() {
  if (const char* env = std::getenv("COMPACTA_BUDGET")) {
    integer b;
    if (b.set_str(env, 10) == 0 && b > 0) return b;
  }
  return integer(100000000);
}

namespace detail {

using raw_spine = std::vector<spine_tree::node>;

// Root with a left subtree of size i and a right subtree of size n-1-i;
// the right subtree is renumbered after the left one.
inline void append_spines(std::uint32_t n, const std::vector<std::vector<raw_spine>>& by_size,
                          std::vector<raw_spine>& out) {
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t j = n - 1 - i;
    for (const auto& l : by_size[i]) {
      for (const auto& r : by_size[j]) {
        raw_spine s;
        s.reserve(n);
        s.insert(s.end(), l.begin(), l.end());
        for (auto nd : r) {
          if (nd.left) nd.left += i;
          if (nd.right) nd.right += i;
          s.push_back(nd);
        }
        s.push_back({i ? i : 0u, j ? n - 1 : 0u});
        out.push_back(std::move(s));
      }
    }
  }
}

}  // namespace detail

/// All Catalan(n) spines of size n, in a fixed order.
inline std::vector<spine_tree> gen_spines(std::uint32_t n) {
  std::vector<std::vector<detail::raw_spine>> by_size(n + 1);
  by_size[0].push_back({});
  for (std::uint32_t m = 1; m <= n; ++m) detail::append_spines(m, by_size, by_size[m]);
  std::vector<spine_tree> out;
  out.reserve(by_size[n].size());
  for (auto& s : by_size[n]) out.emplace_back(std::move(s));
  return out;
}

/// Number of relaxed trees on spine `s` when `pool` extra targets are available:
/// the product over pointer slots of (pool + number of legal targets).
inline integer spine_product(const spine_tree& s, std::uint32_t pool = 0) {
  integer prod = 1;
  if (s.empty()) return prod;
  for (const auto& v : pointer_slots(s)) prod *= static_cast<unsigned long>(pool + v.max_target + 1);
  return prod;
}

/// Sum of spine_product over every spine of size n (with right height at most
/// k when given). n = 0 gives pool + 1: the leaf or one of the pool trees.
inline integer count_relaxed_spine_product(std::uint32_t n, std::optional<std::uint32_t> k = std::nullopt,
                                           std::uint32_t pool = 0, unsigned threads = 1) {
  if (n == 0) return integer(pool + 1);
  auto spines = gen_spines(n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(spines.size())));
  std::vector<integer> partial(threads, integer(0));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < spines.size(); i += threads)
      if (!k || right_height(spines[i]) <= *k) partial[w] += spine_product(spines[i], pool);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool_threads;
    for (unsigned w = 0; w < threads; ++w) pool_threads.emplace_back(work, w);
    for (auto& t : pool_threads) t.join();
  }
  integer total = 0;
  for (const auto& x : partial) total += x;
  return total;
}

/// Upper bound on the number of relaxed trees the filter admits (compacted
/// trees are drawn from the same candidates).
inline integer estimate_candidates(const gen_filter& f) {
  integer r = relaxed_count(f.n);
  if (!f.max_right_height) return r;
  // A height bound can shrink the space a lot; count it exactly if the
  // spines themselves are cheap to list.
  if (catalan(f.n) <= 2000000) return count_relaxed_spine_product(f.n, f.max_right_height);
  return r;
}

inline void check_budget(const gen_filter& f, const integer& budget) {
  integer est = estimate_candidates(f);
  if (est > budget) throw budget_exceeded(est, budget);
}

namespace detail {

/// Calls fn(dag) for every pointer assignment of spine `s`. Assignments are
/// visited in mixed-radix order, the last slot in visit order varying fastest.
template <class Fn>
void for_each_assignment(const spine_tree& s, family kind, Fn&& fn) {
  if (s.empty()) {
    relaxed_dag leaf;
    fn(leaf);
    return;
  }
  std::vector<dag_node> nodes(s.size());
  for (post_order_index v = 1; v <= s.size(); ++v) {
    const auto& sn = s.at(v);
    nodes[v - 1].left = sn.left ? slot::child(sn.left) : slot::pointer(0);
    nodes[v - 1].right = sn.right ? slot::child(sn.right) : slot::pointer(0);
  }
  relaxed_dag dag(std::move(nodes));
  const auto slots = pointer_slots(s);
  std::vector<post_order_index> digit(slots.size(), 0);
  while (true) {
    if (kind == family::relaxed || is_compacted(dag)) fn(std::as_const(dag));
    std::size_t i = slots.size();
    while (i > 0) {
      --i;
      if (digit[i] < slots[i].max_target) {
        ++digit[i];
        dag.set(slots[i].node, slots[i].side, slot::pointer(digit[i]));
        break;
      }
      digit[i] = 0;
      dag.set(slots[i].node, slots[i].side, slot::pointer(0));
      if (i == 0) return;
    }
    if (slots.empty()) return;
  }
}

}  // namespace detail

/// Streams every tree admitted by `f` to fn(const relaxed_dag&), each once,
/// in a deterministic order. Throws budget_exceeded before generating
/// anything if the candidate estimate is above `budget`.
template <class Fn>
void for_each_tree(const gen_filter& f, Fn&& fn, const integer& budget = default_budget()) {
  check_budget(f, budget);
  for (const auto& s : gen_spines(f.n))
    if (f.admits(s)) detail::for_each_assignment(s, f.kind, fn);
}

inline std::vector<relaxed_dag> gen_trees(const gen_filter& f, const integer& budget = default_budget()) {
  std::vector<relaxed_dag> out;
  for_each_tree(f, [&](const relaxed_dag& d) { out.push_back(d); }, budget);
  return out;
}

inline std::vector<relaxed_dag> gen_relaxed(std::uint32_t n, std::optional<std::uint32_t> k = std::nullopt,
                                            const integer& budget = default_budget()) {
  return gen_trees({n, k, family::relaxed}, budget);
}

inline std::vector<relaxed_dag> gen_compacted(std::uint32_t n, std::optional<std::uint32_t> k = std::nullopt,
                                              const integer& budget = default_budget()) {
  return gen_trees({n, k, family::compacted}, budget);
}

/// Exhaustive count without materializing the trees; spines are split
/// across `threads` workers.
inline std::uint64_t count_by_generation(const gen_filter& f, const integer& budget = default_budget(),
                                         unsigned threads = 1) {
  check_budget(f, budget);
  auto spines = gen_spines(f.n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(spines.size())));
  std::vector<std::uint64_t> partial(threads, 0);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < spines.size(); i += threads)
      if (f.admits(spines[i])) detail::for_each_assignment(spines[i], f.kind, [&](const relaxed_dag&) { ++partial[w]; });
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w) workers.emplace_back(work, w);
    for (auto& t : workers) t.join();
  }
  std::uint64_t total = 0;
  for (auto x : partial) total += x;
  return total;
}

}  // namespace compacta

#endif  // COMPACTA_ENUMERATE_HPP
