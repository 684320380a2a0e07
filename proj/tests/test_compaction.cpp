#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "compacta/compaction.hpp"
#include "compacta/enumerate.hpp"

using namespace compacta;

namespace {

binary_tree random_tree(std::mt19937& rng, std::uint32_t size) {
  if (size == 0) return binary_tree::leaf();
  std::uniform_int_distribution<std::uint32_t> split(0, size - 1);
  std::uint32_t l = split(rng);
  auto left = random_tree(rng, l);
  auto right = random_tree(rng, size - 1 - l);
  return binary_tree::internal(left, right);
}

std::size_t distinct_subtrees(const binary_tree& t) {
  std::set<std::string> seen;
  auto rec = [&](auto&& self, const binary_tree& s) -> void {
    if (s.is_leaf()) return;
    seen.insert(to_string(s));
    self(self, s.left());
    self(self, s.right());
  };
  rec(rec, t);
  return seen.size();
}

}  // namespace

TEST(UidCompact, ExpressionTable) {
  auto t = parse_tree("(* (- (* x x) (* y y)) (+ (* x x) (* y y)))");
  auto res = uid_compact(t);
  // Post-order discovery: x^2 is complete before y is visited.
  const std::vector<uid_table::row> expect{
      {"x", 0, 0, 1}, {"*", 1, 1, 2}, {"y", 0, 0, 3}, {"*", 3, 3, 4},
      {"-", 2, 4, 5}, {"+", 2, 4, 6}, {"*", 5, 6, 7}};
  EXPECT_EQ(res.table.rows(), expect);
  EXPECT_EQ(res.table.counter(), 7u);
  EXPECT_EQ(res.dag.size(), 7u);
  EXPECT_FALSE(validate(res.dag).has_value());
  EXPECT_EQ(to_string(res.dag), "((((@0 @0) @1) ((@0 @0) @3)) (@2 @4))");
}

TEST(UidCompact, ExpressionTableUpToRenaming) {
  // The same table numbered leaves-first, as it is usually displayed; it
  // differs from the post-order numbering only by swapping uids 2 and 3.
  const std::vector<uid_table::row> leaves_first{
      {"x", 0, 0, 1}, {"y", 0, 0, 2}, {"*", 1, 1, 3}, {"*", 2, 2, 4},
      {"-", 3, 4, 5}, {"+", 3, 4, 6}, {"*", 5, 6, 7}};
  const uid rename[] = {0, 1, 3, 2, 4, 5, 6, 7};
  auto res = uid_compact(parse_tree("(* (- (* x x) (* y y)) (+ (* x x) (* y y)))"));
  std::set<std::tuple<std::string, uid, uid, uid>> ours, theirs;
  for (const auto& r : res.table.rows()) ours.emplace(r.label, r.left, r.right, r.id);
  for (const auto& r : leaves_first) theirs.emplace(r.label, rename[r.left], rename[r.right], rename[r.id]);
  EXPECT_EQ(ours, theirs);
}

TEST(UidCompact, LeafGivesEmptyTable) {
  auto res = uid_compact(binary_tree::leaf());
  EXPECT_EQ(res.dag.size(), 0u);
  EXPECT_EQ(res.table.size(), 0u);
  EXPECT_EQ(res.table.counter(), 0u);
}

TEST(UidCompact, CompleteTreeKeepsOneNodePerHeight) {
  auto t = parse_tree("(((. .) (. .)) ((. .) (. .)))");
  ASSERT_EQ(t.size(), 7u);
  auto res = uid_compact(t);
  EXPECT_EQ(res.dag.size(), 3u);
  EXPECT_EQ(to_string(res.dag), "(((@0 @0) @1) @2)");
  EXPECT_TRUE(is_compacted(res.dag));
}

TEST(UidCompact, CsvOutput) {
  std::ostringstream os;
  uid_compact(parse_tree("(f a a)")).table.write_csv(os);
  EXPECT_EQ(os.str(), "label,uid_left,uid_right,uid\na,0,0,1\nf,1,1,2\n");
}

TEST(Unfold, SmallCases) {
  EXPECT_TRUE(unfold(parse_dag("(@0 @0)"), 0).is_leaf());
  EXPECT_EQ(to_string(unfold(parse_dag("(@0 @0)"))), "(. .)");
  EXPECT_EQ(to_string(unfold(parse_dag("((@0 @0) @1)"))), "((. .) (. .))");
  EXPECT_THROW(unfold(parse_dag("(@0 @0)"), 2), std::out_of_range);
}

TEST(Unfold, SharesRepeatedSubtrees) {
  // A left chain whose every right pointer repeats the left child doubles
  // the unfolded size at each level.
  auto d = parse_dag("(((((@0 @0) @1) @2) @3) @4)");
  auto t = unfold(d);
  EXPECT_EQ(t.size(), 31u);
  EXPECT_EQ(t.left().root(), t.right().root());
}

TEST(Unfold, RoundTripOnRandomTrees) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::uint32_t> size(0, 12);
  for (int i = 0; i < 1000; ++i) {
    auto t = random_tree(rng, size(rng));
    auto res = uid_compact(t);
    ASSERT_EQ(unfold(res.dag), t) << to_string(t);
    EXPECT_EQ(res.table.size(), distinct_subtrees(t));
    EXPECT_LE(res.dag.size(), t.size());
    EXPECT_TRUE(is_compacted(res.dag));
    EXPECT_FALSE(validate(res.dag).has_value());
    // Compaction of the unfolding reproduces the same table.
    EXPECT_EQ(uid_compact(unfold(res.dag)).table.rows(), res.table.rows());
  }
}

TEST(IsCompacted, UniqueFailureAtSizeThree) {
  std::vector<relaxed_dag> failing;
  for (const auto& d : gen_relaxed(3))
    if (!is_compacted(d)) failing.push_back(d);
  ASSERT_EQ(failing.size(), 1u);
  auto dup = first_duplicate(failing[0]);
  ASSERT_TRUE(dup.has_value());
  EXPECT_TRUE(failing[0].is_cherry(dup->node));
  EXPECT_EQ(unfold(failing[0], dup->node), unfold(failing[0], dup->same_as));
  EXPECT_EQ(to_string(failing[0]), "((@0 @0) (@0 @0))");
}

TEST(IsCompacted, DuplicatesAreAlwaysCherries) {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    std::uint64_t bad = 0;
    for_each_tree({n, std::nullopt, family::relaxed}, [&](const relaxed_dag& d) {
      if (auto dup = first_duplicate(d)) {
        ++bad;
        EXPECT_TRUE(d.is_cherry(dup->node)) << to_string(d);
      }
    });
    EXPECT_EQ(bad, relaxed_count(n) - compacted_count(n)) << "n=" << n;
  }
}
