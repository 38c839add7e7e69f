#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "setpair/error.hpp"
#include "setpair/functionals.hpp"
#include "setpair/lovasz.hpp"

namespace setpair {
namespace {

SetPair pair(std::size_t n, std::initializer_list<std::size_t> a,
             std::initializer_list<std::size_t> b) {
  return SetPair(VertexSet(n, a), VertexSet(n, b));
}

constexpr TableRow kRows[] = {TableRow::F1, TableRow::F2, TableRow::G1, TableRow::G2,
                              TableRow::G3};

TEST(Functionals, TriangleExamples) {
  const Graph g = testing::k3();
  const std::vector<double> x{1, -1, 0};
  EXPECT_DOUBLE_EQ(tv(g, x), 4.0);
  EXPECT_DOUBLE_EQ(iplus(g, x), 2.0);
  EXPECT_DOUBLE_EQ(ihat(g, x), 2.0);
  EXPECT_DOUBLE_EQ(dnorm1(g, x), 4.0);
  EXPECT_DOUBLE_EQ(sup_norm(x), 1.0);
  const std::vector<double> y{1, 1, -1};
  EXPECT_DOUBLE_EQ(iplus(g, y), 2.0);
  const std::vector<double> zero(3, 0.0);
  EXPECT_EQ(iplus(g, zero), 0.0);
  EXPECT_EQ(sup_norm(zero), 0.0);
  EXPECT_EQ(dnorm1(g, zero), 0.0);
  const std::vector<double> c{3, 3, 3};
  EXPECT_EQ(tv(g, c), 0.0);
  const std::vector<double> flat{2, -2, 2};
  EXPECT_EQ(ihat(g, flat), 0.0);
}

TEST(Functionals, MatchBruteFormulas) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = testing::random_connected_graph(seed, 3 + seed % 6);
    for (int i = 0; i < 50; ++i) {
      const auto x = testing::random_vector(rng, g.n(), 0.2);
      EXPECT_NEAR(tv(g, x), testing::brute_tv(g, x), 1e-12);
      EXPECT_NEAR(iplus(g, x), testing::brute_iplus(g, x), 1e-12);
      EXPECT_NEAR(ihat(g, x), testing::brute_ihat(g, x), 1e-12);
      EXPECT_NEAR(dnorm1(g, x), testing::brute_dnorm(g, x), 1e-12);
    }
  }
}

TEST(Functionals, DimensionMismatch) {
  const std::vector<double> x{1, 2};
  EXPECT_THROW(tv(testing::k3(), x), InvalidArgument);
}

TEST(MedianDev, PathExample) {
  const std::vector<double> v{0, 1, 2};
  const MedianDeviation md = median_dev(testing::p3(), v);
  EXPECT_DOUBLE_EQ(md.value, 2.0);
  EXPECT_DOUBLE_EQ(md.minimizer, 1.0);
}

TEST(MedianDev, ConstantAndEmptyGraph) {
  const std::vector<double> v{4, 4, 4};
  const MedianDeviation md = median_dev(testing::k3(), v);
  EXPECT_EQ(md.value, 0.0);
  EXPECT_EQ(md.minimizer, 4.0);
  const Graph empty(3, {});
  const MedianDeviation z = median_dev(empty, std::vector<double>{1, 2, 3});
  EXPECT_EQ(z.value, 0.0);
  EXPECT_EQ(z.minimizer, 0.0);
}

TEST(MedianDev, MatchesScanOverEntries) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = testing::random_connected_graph(trial, 2 + trial % 8);
    const auto v = testing::random_vector(rng, g.n(), 0.2);
    EXPECT_NEAR(median_dev(g, v).value, testing::brute_median_dev(g, v), 1e-12);
  }
}

TEST(MedianDev, HomogeneousAndTranslationCovariant) {
  std::mt19937_64 rng(7);
  const Graph g = testing::random_connected_graph(3, 7);
  for (int trial = 0; trial < 200; ++trial) {
    auto v = testing::random_vector(rng, 7);
    const MedianDeviation base = median_dev(g, v);
    auto shifted = v;
    for (double& e : shifted) e += 1.75;
    const MedianDeviation s = median_dev(g, shifted);
    EXPECT_NEAR(s.value, base.value, 1e-12);
    EXPECT_NEAR(s.minimizer, base.minimizer + 1.75, 1e-12);
    auto scaled = v;
    for (double& e : scaled) e *= 3.0;
    EXPECT_NEAR(median_dev(g, scaled).value, 3.0 * base.value, 1e-11);
  }
}

TEST(TableFunction, Examples) {
  const Graph g = testing::k3();
  EXPECT_DOUBLE_EQ(table_function(g, TableRow::F2)(pair(3, {0}, {1})), 1.0);
  EXPECT_DOUBLE_EQ(table_function(g, TableRow::G3)(pair(3, {0}, {1})), 4.0);
  for (const SetPair& p : enumerate_setpairs(3)) {
    EXPECT_DOUBLE_EQ(table_function(g, TableRow::G1)(p), 6.0);
  }
  EXPECT_THROW(parse_table_row("F3"), InvalidArgument);
}

TEST(TableExtension, WorkedExample) {
  const std::vector<double> x{2, -1, 0};
  EXPECT_NEAR(table_extension_closed(testing::k3(), TableRow::F2, x), 1.0, 1e-12);
}

TEST(TableExtension, ClosedFormsMatchIntegralAtIndicators) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const Graph g = testing::random_connected_graph(seed, 6);
    for (TableRow row : kRows) {
      const SetPairFunction f = table_function(g, row);
      for (const SetPair& p : enumerate_setpairs(6)) {
        if (p.empty()) continue;
        EXPECT_NEAR(table_extension_closed(g, row, indicator(p)), f(p), 1e-12)
            << to_string(row) << ' ' << to_text(p);
      }
    }
  }
}

TEST(TableExtension, ClosedFormsMatchBruteIntegral) {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = testing::random_connected_graph(seed, 2 + seed % 9);
    for (TableRow row : kRows) {
      const SetPairFunction f = table_function(g, row);
      for (int i = 0; i < 40; ++i) {
        const auto x = testing::random_vector(rng, g.n(), 0.2);
        const double oracle = testing::brute_extension(f, x);
        EXPECT_NEAR(table_extension_closed(g, row, x), oracle, 1e-12 * std::max(1.0, oracle))
            << to_string(row);
      }
    }
  }
}

TEST(TableExtension, MagnitudeVariantIsNotTheExtension) {
  const Graph g = testing::p2();
  const std::vector<double> x{1, -1};
  EXPECT_NEAR(table_extension_closed(g, TableRow::G3, x), 2.0, 1e-12);
  EXPECT_NEAR(g3_extension_magnitude(g, x), 0.0, 1e-12);
  EXPECT_NEAR(setpair_extension(table_function(g, TableRow::G3), x), 2.0, 1e-12);
}

TEST(Functionals, DecompositionIdentity) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 2000; ++trial) {
    const Graph g = testing::random_connected_graph(trial, 2 + trial % 9);
    const auto x = testing::random_vector(rng, g.n(), 0.2);
    EXPECT_NEAR(tv(g, x), dnorm1(g, x) + ihat(g, x) - iplus(g, x), 1e-12);
  }
}

}  // namespace
}  // namespace setpair
