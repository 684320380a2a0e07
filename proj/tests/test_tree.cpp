#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "compacta/enumerate.hpp"
#include "compacta/tree.hpp"

using namespace compacta;

TEST(ParseTree, Leaf) {
  auto t = parse_tree(".");
  EXPECT_TRUE(t.is_leaf());
  EXPECT_EQ(t.size(), 0u);
}

TEST(ParseTree, SingleNode) {
  auto t = parse_tree("(. .)");
  ASSERT_FALSE(t.is_leaf());
  EXPECT_TRUE(t.left().is_leaf());
  EXPECT_TRUE(t.right().is_leaf());
  EXPECT_EQ(t.size(), 1u);
}

TEST(ParseTree, CompleteHeightTwo) {
  auto t = parse_tree("((. .) (. .))");
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.left(), t.right());
  EXPECT_EQ(to_string(t), "((. .) (. .))");
}

TEST(ParseTree, WhitespaceIsFlexible) {
  EXPECT_EQ(parse_tree("  ( (.   .)\n.) "), parse_tree("((. .) .)"));
}

TEST(ParseTree, LabeledForms) {
  auto t = parse_tree("(* x (+ y z))");
  EXPECT_EQ(t.label(), "*");
  EXPECT_EQ(t.left().label(), "x");
  EXPECT_TRUE(t.left().left().is_leaf());
  EXPECT_EQ(t.right().label(), "+");
  EXPECT_EQ(t.size(), 5u);
  EXPECT_EQ(to_string(t), "(* x (+ y z))");
  // A labeled node with nil children prints as its bare atom.
  EXPECT_EQ(to_string(parse_tree("(x . .)")), "x");
}

TEST(ParseTree, RoundTripsThroughPrint) {
  for (const char* s : {".", "(. .)", "((. .) .)", "(. (. (. .)))", "(f (g a b) .)", "a"}) {
    auto t = parse_tree(s);
    EXPECT_EQ(parse_tree(to_string(t)), t) << s;
  }
}

TEST(ParseTree, ErrorsCarryByteOffset) {
  try {
    parse_tree("((. .) .");
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.offset(), 8u);
  }
  EXPECT_THROW(parse_tree(""), parse_error);
  EXPECT_THROW(parse_tree("(. .) ."), parse_error);
  EXPECT_THROW(parse_tree("(.)"), parse_error);
  EXPECT_THROW(parse_tree(")"), parse_error);
  EXPECT_THROW(parse_tree("(@1 .)"), parse_error);
  EXPECT_THROW(parse_tree(".x"), parse_error);
}

TEST(Dag, TextForm) {
  auto d = parse_dag("(@0 @0)");
  EXPECT_EQ(d.size(), 1u);
  EXPECT_TRUE(d.is_cherry(1));
  EXPECT_EQ(to_string(d), "(@0 @0)");
  EXPECT_EQ(parse_dag("@0").size(), 0u);
  EXPECT_EQ(to_string(relaxed_dag()), "@0");
  auto e = parse_dag("((@0 @0) (@1 @1))");
  EXPECT_EQ(e.size(), 3u);
  EXPECT_EQ(e.at(3).left, slot::child(1));
  EXPECT_EQ(e.at(3).right, slot::child(2));
  EXPECT_EQ(e.at(2).left, slot::pointer(1));
  EXPECT_THROW(parse_dag("@2"), parse_error);
  EXPECT_THROW(parse_dag("(@x @0)"), parse_error);
  EXPECT_THROW(parse_dag("(@0 @0"), parse_error);
}

TEST(PostOrder, SizeOne) {
  EXPECT_EQ(post_order(parse_dag("(@0 @0)")), (std::vector<post_order_index>{1}));
}

TEST(PostOrder, LeftChainHasDecreasingDepth) {
  auto d = parse_dag("(((@0 @0) @1) @2)");
  EXPECT_EQ(post_order(d), (std::vector<post_order_index>{1, 2, 3}));
  auto depth = d.spine().depths();
  EXPECT_GT(depth[1], depth[2]);
  EXPECT_GT(depth[2], depth[3]);
}

TEST(PostOrder, ChildrenPrecedeParent) {
  auto d = parse_dag("((@0 @0) (@1 @1))");
  auto order = post_order(d);
  auto pos = [&](post_order_index v) { return std::find(order.begin(), order.end(), v) - order.begin(); };
  EXPECT_LT(pos(1), pos(3));
  EXPECT_LT(pos(2), pos(3));
}

TEST(PostOrder, IsAPermutationForEveryTreeOfSizeFour) {
  std::vector<post_order_index> expect(4);
  std::iota(expect.begin(), expect.end(), 1u);
  for (const auto& d : gen_relaxed(4)) EXPECT_EQ(post_order(d), expect);
}

TEST(PointerSlots, LegalTargetsAreEarlierNodes) {
  // Right spine child: the root's left slot is visited before node 1 exists.
  auto s = parse_dag("(@0 (@0 @0))").spine();
  auto slots = pointer_slots(s);
  ASSERT_EQ(slots.size(), 3u);
  EXPECT_EQ(slots[0].node, 2u);
  EXPECT_EQ(slots[0].side, side::left);
  EXPECT_EQ(slots[0].max_target, 0u);
  EXPECT_EQ(slots[1].node, 1u);
  EXPECT_EQ(slots[2].node, 1u);
  EXPECT_EQ(slots[2].max_target, 0u);
}

TEST(RightHeight, Examples) {
  EXPECT_EQ(right_height(parse_dag("(@0 @0)")), 0u);
  EXPECT_EQ(right_height(parse_dag("((((@0 @0) @1) @2) @3)")), 0u);
  EXPECT_EQ(right_height(parse_dag("(@0 (@0 @0))")), 1u);
  // A compacted tree with levels 0, 1 and a single node at level 2.
  auto d = parse_dag("(((@0 @0) (@1 @0)) ((@2 @1) (@3 @0)))");
  EXPECT_FALSE(validate(d).has_value());
  EXPECT_EQ(right_height(d), 2u);
  auto lv = d.spine().levels();
  EXPECT_EQ(std::count(lv.begin() + 1, lv.end(), 2u), 1);
}

TEST(Validate, AcceptsGeneratedTrees) {
  for (const auto& d : gen_relaxed(4)) EXPECT_FALSE(validate(d).has_value()) << to_string(d);
  EXPECT_FALSE(validate(relaxed_dag()).has_value());
}

TEST(Validate, SelfPointer) {
  auto v = validate(parse_dag("(@0 @1)"));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->node, 1u);
  EXPECT_EQ(v->slot_side, side::right);
  EXPECT_NE(v->message().find("own node"), std::string::npos);
}

TEST(Validate, PointerToLaterNode) {
  // Valid tree, then point node 1 at node 2, which completes after it.
  auto d = parse_dag("((@0 @0) @1)");
  ASSERT_FALSE(validate(d).has_value());
  d.set(1, side::right, slot::pointer(2));
  auto v = validate(d);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->node, 1u);
  EXPECT_EQ(v->slot_side, side::right);
}

TEST(Validate, LeftPointerCannotSeeOwnSubtree) {
  // The root's left slot is visited before its right subtree (node 1).
  auto v = validate(parse_dag("(@1 (@0 @0))"));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->node, 2u);
  EXPECT_EQ(v->slot_side, side::left);
}

TEST(Validate, StructuralViolations) {
  relaxed_dag two_parents({{slot::pointer(0), slot::pointer(0)}, {slot::child(1), slot::child(1)}});
  EXPECT_TRUE(validate(two_parents).has_value());
  relaxed_dag disconnected({{slot::pointer(0), slot::pointer(0)}, {slot::pointer(0), slot::pointer(1)}});
  EXPECT_TRUE(validate(disconnected).has_value());
  relaxed_dag forward({{slot::child(2), slot::pointer(0)}, {slot::pointer(0), slot::pointer(0)}});
  EXPECT_TRUE(validate(forward).has_value());
}

TEST(Invariants, PointerAndEdgeCounts) {
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (const auto& d : gen_relaxed(n)) {
      // n pointers plus the leaf slot; n-1 spine edges.
      EXPECT_EQ(d.pointer_count(), n + 1);
      std::uint32_t edges = 0;
      for (const auto& nd : d.nodes()) edges += nd.left.is_spine() + nd.right.is_spine();
      EXPECT_EQ(edges, n - 1);
      EXPECT_EQ(d.spine().size(), n);
    }
}

TEST(SpineTree, RejectsBadNumbering) {
  EXPECT_THROW(spine_tree({{0, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(spine_tree({{0, 0}, {0, 0}, {2, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(spine_tree({{0, 0}, {0, 0}, {1, 2}}));
}
