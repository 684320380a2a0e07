#include <gtest/gtest.h>

#include <set>

#include "compacta/enumerate.hpp"

using namespace compacta;

TEST(GenSpines, CatalanManyAndDistinct) {
  EXPECT_EQ(gen_spines(0).size(), 1u);
  EXPECT_TRUE(gen_spines(0)[0].empty());
  for (std::uint32_t n = 0; n <= 8; ++n) {
    auto spines = gen_spines(n);
    EXPECT_EQ(integer(static_cast<unsigned long>(spines.size())), catalan(n)) << n;
    std::set<std::string> distinct;
    for (const auto& s : spines) distinct.insert(to_string(s));
    EXPECT_EQ(distinct.size(), spines.size());
  }
  EXPECT_EQ(gen_spines(3).size(), 5u);
  EXPECT_EQ(gen_spines(6).size(), 132u);
}

TEST(GenRelaxed, Counts) {
  EXPECT_EQ(gen_relaxed(0).size(), 1u);
  EXPECT_EQ(gen_relaxed(1).size(), 1u);
  EXPECT_EQ(gen_relaxed(3).size(), 16u);
  EXPECT_EQ(gen_relaxed(4).size(), 127u);
  EXPECT_EQ(gen_relaxed(4, 2).size(), 126u);
  EXPECT_EQ(gen_relaxed(4, 0).size(), 24u);
}

TEST(GenRelaxed, EachTreeOnceAndValid) {
  auto all = gen_relaxed(5);
  std::set<std::string> distinct;
  for (const auto& d : all) {
    distinct.insert(to_string(d));
    EXPECT_FALSE(validate(d).has_value());
  }
  EXPECT_EQ(distinct.size(), all.size());
  EXPECT_EQ(all.size(), 1363u);
}

TEST(GenRelaxed, DeterministicOrder) {
  auto a = gen_relaxed(3);
  auto b = gen_relaxed(3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_string(a.front()), "(@0 (@0 (@0 @0)))");
  EXPECT_EQ(to_string(a.back()), "(((@0 @0) @1) @2)");
}

TEST(GenCompacted, Counts) {
  EXPECT_EQ(gen_compacted(2).size(), 3u);
  EXPECT_EQ(gen_compacted(4).size(), 111u);
  EXPECT_EQ(gen_compacted(5).size(), 1119u);
  for (const auto& d : gen_compacted(4)) EXPECT_TRUE(is_compacted(d));
}

TEST(GenFilter, HeightBoundRespected) {
  for (const auto& d : gen_relaxed(5, 1)) EXPECT_LE(right_height(d), 1u);
}

TEST(SpineProduct, Counts) {
  EXPECT_EQ(count_relaxed_spine_product(0), 1);
  EXPECT_EQ(count_relaxed_spine_product(5), 1363);
  EXPECT_EQ(count_relaxed_spine_product(9), 142190703);
  EXPECT_EQ(count_relaxed_spine_product(6, 0), 720);
  EXPECT_EQ(count_relaxed_spine_product(4, 2), 126);
}

TEST(SpineProduct, ThreadsAgree) {
  EXPECT_EQ(count_relaxed_spine_product(8, std::nullopt, 0, 3), count_relaxed_spine_product(8));
  gen_filter f{5, std::nullopt, family::compacted};
  EXPECT_EQ(count_by_generation(f, default_budget(), 4), count_by_generation(f));
}

TEST(SpineProduct, PoolMatchesDeltaTable) {
  auto delta = build_table(table_kind::delta, 10);
  for (std::uint32_t n = 0; n <= 5; ++n)
    for (std::uint32_t p = 0; p <= 4; ++p) EXPECT_EQ(count_relaxed_spine_product(n, std::nullopt, p), delta.at(n, p));
}

TEST(Budget, ExceededBeforeGenerating) {
  bool called = false;
  try {
    for_each_tree({6, std::nullopt, family::relaxed}, [&](const relaxed_dag&) { called = true; }, integer(1000));
    FAIL() << "expected budget_exceeded";
  } catch (const budget_exceeded& e) {
    EXPECT_EQ(e.estimate(), 18628);
  }
  EXPECT_FALSE(called);
  // A height bound shrinks the estimate.
  EXPECT_NO_THROW(count_by_generation({6, 0, family::relaxed}, integer(1000)));
}

TEST(Budget, EnvironmentOverride) {
  setenv("COMPACTA_BUDGET", "12345", 1);
  EXPECT_EQ(default_budget(), 12345);
  setenv("COMPACTA_BUDGET", "junk", 1);
  EXPECT_EQ(default_budget(), 100000000);
  unsetenv("COMPACTA_BUDGET");
  EXPECT_EQ(default_budget(), 100000000);
}

TEST(Bounds, FactorialAndCatalan) {
  for (std::uint32_t n = 0; n <= 6; ++n) {
    integer c(static_cast<unsigned long>(count_by_generation({n, std::nullopt, family::compacted})));
    EXPECT_LE(factorial(n), c);
    EXPECT_LE(c, catalan(n) * factorial(n));
  }
}

TEST(Bounds, HeightMonotone) {
  for (std::uint32_t n = 1; n <= 7; ++n) {
    integer all = count_relaxed_spine_product(n);
    integer prev = 0;
    for (std::uint32_t k = 0; k <= n; ++k) {
      integer cur = count_relaxed_spine_product(n, k);
      EXPECT_LE(prev, cur);
      EXPECT_LE(cur, all);
      if (n <= k + 1) {
        EXPECT_EQ(cur, all) << n << " " << k;
      }
      prev = cur;
    }
  }
}
