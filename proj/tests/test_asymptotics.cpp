#include <gtest/gtest.h>

#include <cmath>

#include "compacta/asymptotics.hpp"

using namespace compacta;

TEST(Singularity, RelaxedTwo) {
  auto s = singularity(2, family::relaxed);
  EXPECT_NEAR(static_cast<double>(s.growth), (3 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_NEAR(static_cast<double>(s.rho), 1 / 2.6180339887498949, 1e-12);
  EXPECT_DOUBLE_EQ(static_cast<double>(s.exponent), -1.0);
  ASSERT_TRUE(s.delta1_exact.has_value());
  EXPECT_EQ(*s.delta1_exact, 1);
  EXPECT_LT(s.residual, 1e-12L);
}

TEST(Singularity, CompactedOneAndThree) {
  auto c1 = singularity(1, family::compacted);
  EXPECT_NEAR(static_cast<double>(c1.delta1), 1.25, 1e-15);
  EXPECT_NEAR(static_cast<double>(c1.exponent), -0.75, 1e-15);
  auto c3 = singularity(3, family::compacted);
  EXPECT_NEAR(static_cast<double>(c3.growth), 3.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(c3.exponent), -16.0 / 9.0, 1e-15);
}

TEST(Singularity, IndicialRoots) {
  auto r = singularity(4, family::relaxed);
  EXPECT_EQ(r.indicial_roots, (std::vector<long double>{0, 1, 2, 1}));
  auto c = singularity(2, family::compacted);
  ASSERT_EQ(c.indicial_roots.size(), 3u);
  EXPECT_NEAR(static_cast<double>(c.indicial_roots[2]), static_cast<double>(2 - c.delta1), 1e-15);
  auto z = singularity(0, family::compacted);
  EXPECT_EQ(z.growth, 1);
  EXPECT_EQ(z.exponent, 0);
}

TEST(Singularity, Delta1CrossCheck) {
  for (std::uint32_t k = 1; k <= 40; ++k) EXPECT_TRUE(relaxed_delta1_identity(k)) << k;
  for (std::uint32_t k = 1; k <= 20; ++k) {
    auto c = singularity(k, family::compacted);
    EXPECT_NEAR(static_cast<double>(c.delta1), static_cast<double>(c.delta1_numeric), 1e-9) << k;
    EXPECT_LT(c.residual, 1e-12L) << k;
    auto r = singularity(k, family::relaxed);
    EXPECT_NEAR(static_cast<double>(r.delta1_numeric), k / 2.0, 1e-9) << k;
  }
}

TEST(Singularity, RhoDecreasesToQuarter) {
  long double prev = 1;
  for (std::uint32_t k = 1; k <= 60; ++k) {
    long double r = rho_k(k);
    EXPECT_LT(r, prev);
    EXPECT_GT(r, 0.25L);
    prev = r;
  }
}

TEST(Table1, Rows) {
  auto rows = table1();
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_NEAR(static_cast<double>(rows[0].r), 2.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(rows[0].alpha), -0.75, 1e-15);
  EXPECT_NEAR(static_cast<double>(rows[6].r), 3.618, 5e-4);
  EXPECT_NEAR(static_cast<double>(rows[6].alpha), -3.766, 5e-4);
  EXPECT_NEAR(static_cast<double>(rows[3].alpha), -2.275, 5e-4);
  for (const auto& row : rows) EXPECT_NEAR(static_cast<double>(row.beta), -0.5 * row.k, 1e-15);
}

TEST(Table1, SymbolicEntries) {
  // Each compacted exponent in its printed symbolic form.
  auto c2 = [](double x) { return std::cos(x) * std::cos(x); };
  const double pi = std::numbers::pi;
  const double alpha[] = {-0.75,
                          -6.0 / 5 - 1 / (20 * c2(pi / 5)),
                          -16.0 / 9,
                          -15.0 / 7 - 3 / (28 * c2(pi / 7)),
                          -21.0 / 8 - 1 / (8 * c2(pi / 8)),
                          -28.0 / 9 - 5 / (36 * c2(pi / 9)),
                          -18.0 / 5 - 3 / (20 * c2(pi / 10))};
  auto rows = table1();
  for (std::size_t i = 0; i < 7; ++i) EXPECT_NEAR(static_cast<double>(rows[i].alpha), alpha[i], 1e-14) << i + 1;
}

TEST(ProportionExponent, Values) {
  EXPECT_NEAR(static_cast<double>(proportion_exponent(1)), -0.25, 1e-15);
  EXPECT_NEAR(static_cast<double>(proportion_exponent(2)), -0.276, 5e-4);
  EXPECT_NEAR(static_cast<double>(proportion_exponent(5)), -0.2714466, 1e-7);
  for (std::uint32_t k = 1; k <= 50; ++k) {
    EXPECT_LE(proportion_exponent(k), -0.25L + 0.01L);
    auto diff = singularity(k, family::compacted).exponent - singularity(k, family::relaxed).exponent;
    EXPECT_NEAR(static_cast<double>(proportion_exponent(k)), static_cast<double>(diff), 1e-14);
  }
}

TEST(Extrapolation, ExactOnPolynomialsInH) {
  std::vector<long double> h{0.1L, 0.05L, 0.025L, 0.0125L};
  std::vector<long double> y;
  for (auto x : h) y.push_back(2 + 3 * x - x * x + 0.5L * x * x * x);
  EXPECT_NEAR(static_cast<double>(extrapolate_to_zero(h, y)), 2.0, 1e-12);
}

TEST(FitConstant, FactorialIsExact) {
  std::vector<integer> counts;
  for (unsigned n = 0; n <= 64; ++n) counts.push_back(factorial(n));
  auto fit = fit_constant(counts, 1, 0);
  for (auto u : fit.ladder_u) EXPECT_NEAR(static_cast<double>(u), 1.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(fit.estimate), 1.0, 1e-12);
  EXPECT_TRUE(fit.converged);
}

TEST(FitConstant, RelaxedOne) {
  auto fit = fit_constant(1, family::relaxed, 2000);
  EXPECT_NEAR(static_cast<double>(fit.estimate / relaxed_k1_constant()), 1.0, 0.01);
  EXPECT_EQ(fit.ladder_n, (std::vector<std::uint32_t>{125, 250, 500, 1000, 2000}));
}

TEST(FitConstant, CompactedOneSmallLadder) {
  auto fit = fit_constant(1, family::compacted, 1000);
  EXPECT_NEAR(static_cast<double>(fit.estimate / compacted_k1_constant()), 1.0, 0.01);
}

TEST(FitExponent, SlopeMatches) {
  for (family f : {family::relaxed, family::compacted})
    for (std::uint32_t k = 1; k <= 2; ++k) {
      auto s = singularity(k, f);
      auto counts = bounded_height_sequence(k, f, 1200);
      EXPECT_NEAR(static_cast<double>(fit_exponent(counts, s.growth, 500, 1200)), static_cast<double>(s.exponent), 0.05)
          << to_string(f) << " k=" << k;
    }
}
