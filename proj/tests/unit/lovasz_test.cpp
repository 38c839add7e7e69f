#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

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

TEST(SetpairExtension, IndicatorReproducesTable) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const SetPairFunction f = PairTable::random(n, 100 + n, false).as_function();
    for (const SetPair& p : enumerate_setpairs(n)) {
      if (p.empty()) continue;
      EXPECT_NEAR(setpair_extension(f, indicator(p)), f(p), 1e-12);
    }
  }
}

TEST(SetpairExtension, ZeroVector) {
  const SetPairFunction f = PairTable::random(3, 5, false).as_function();
  const std::vector<double> x(3, 0.0);
  EXPECT_EQ(setpair_extension(f, x), 0.0);
  EXPECT_EQ(setpair_extension_integral(f, x), 0.0);
}

TEST(SetpairExtension, CrossWeightWorkedExample) {
  const Graph g = testing::k3();
  const SetPairFunction f2 = table_function(g, TableRow::F2);
  const std::vector<double> x{2, -1, 0};
  EXPECT_NEAR(setpair_extension(f2, x), 1.0, 1e-12);
}

TEST(SetpairExtension, CallsFAtMostNTimes) {
  std::atomic<int> calls{0};
  const SetPairFunction f("count", 5, [&](const SetPair& p) {
    ++calls;
    return static_cast<double>(p.a.count());
  });
  const std::vector<double> x{0.3, -1, 2, 0.3, -0.7};
  setpair_extension(f, x);
  EXPECT_LE(calls.load(), 5);
}

TEST(SetpairExtension, ThreeFormsAgreeWithBruteIntegral) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const PairTable t = PairTable::random(n, 1000 + trial, trial % 2 == 0);
    const SetPairFunction f = t.as_function();
    const auto x = testing::random_vector(rng, n, 0.25);
    const double oracle = testing::brute_extension(t.as_function(), x);
    EXPECT_NEAR(setpair_extension(f, x), oracle, 1e-12);
    EXPECT_NEAR(setpair_extension_integral(f, x), oracle, 1e-12);
    EXPECT_NEAR(setpair_extension_integral(f, x, 3), oracle, 1e-12);
    EXPECT_NEAR(setpair_extension_chain(f, threshold_pairs(x)), oracle, 1e-12);
  }
}

TEST(SetpairExtensionChain, SingleLinkScales) {
  const SetPairFunction f = PairTable::random(3, 9).as_function();
  ChainDecomposition c;
  c.n = 3;
  c.pairs = {pair(3, {0}, {2})};
  c.gaps = {2.5};
  EXPECT_NEAR(setpair_extension_chain(f, c), 2.5 * f(pair(3, {0}, {2})), 1e-12);
}

TEST(SetpairExtensionChain, AlternativeChainSameValue) {
  // x = (2,−1,0) as 1·(1,−1,0) + 0.5·(1,0,0) + 0.5·(1,0,0): split a link.
  const SetPairFunction f = PairTable::random(3, 21).as_function();
  ChainDecomposition c;
  c.n = 3;
  c.pairs = {pair(3, {0}, {1}), pair(3, {0}, {}), pair(3, {0}, {})};
  c.gaps = {1.0, 0.5, 0.5};
  const std::vector<double> x{2, -1, 0};
  EXPECT_NEAR(setpair_extension_chain(f, c), setpair_extension(f, x), 1e-12);
}

TEST(SetpairExtensionChain, RejectsBrokenNesting) {
  const SetPairFunction f = PairTable::random(2, 1).as_function();
  ChainDecomposition c;
  c.n = 2;
  c.pairs = {pair(2, {0}, {}), pair(2, {1}, {})};
  c.gaps = {1.0, 1.0};
  EXPECT_THROW(setpair_extension_chain(f, c), InvalidArgument);
}

TEST(OriginalExtension, Examples) {
  const Graph g = testing::k3();
  const SetFunction cut("cut", 3, [&](const VertexSet& s) { return g.boundary_weight(s); });
  const std::vector<double> x{1, 2, 3};
  EXPECT_NEAR(original_extension(cut, x), 4.0, 1e-12);

  const SetFunction card("card", 3, [](const VertexSet& s) { return 1.0 + s.count(); });
  const std::vector<double> c{2.5, 2.5, 2.5};
  EXPECT_NEAR(original_extension(card, c), 2.5 * 4.0, 1e-12);
  for (std::uint64_t mask = 1; mask < 8; ++mask) {
    const VertexSet s = VertexSet::from_mask(3, mask);
    std::vector<double> ind(3, 0.0);
    for (std::size_t v : s.members()) ind[v] = 1.0;
    EXPECT_NEAR(original_extension(card, ind), card(s), 1e-12);
  }
}

TEST(OriginalExtension, MatchesBruteIntegral) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const PairTable t = PairTable::random(n, trial);
    const auto fn = [&](const VertexSet& s) { return t(SetPair(s, VertexSet(n))); };
    const SetFunction f("f", n, fn);
    const auto x = testing::random_vector(rng, n, 0.2);
    const double oracle = testing::brute_original_extension(fn, x);
    EXPECT_NEAR(original_extension(f, x), oracle, 1e-12);
    EXPECT_NEAR(original_extension_integral(f, x), oracle, 1e-12);
  }
}

TEST(ExtensionProperties, SymmetricCutFunction) {
  const Graph g = testing::k3();
  const PropertyReport r = extension_properties_check(table_function(g, TableRow::F1), 500, 1);
  EXPECT_LE(r.homogeneity, 1e-12);
  EXPECT_LE(r.sign_shift, 1e-12);
  EXPECT_LE(r.additivity, 1e-12);
  EXPECT_EQ(r.evenness, 0.0);
  EXPECT_TRUE(r.symmetric);
  EXPECT_TRUE(r.even_matches_symmetric);
}

TEST(ExtensionProperties, AsymmetricFunctionIsNotEven) {
  const SetPairFunction f("|A|", 4, [](const SetPair& p) { return double(p.a.count()); });
  const PropertyReport r = extension_properties_check(f, 500, 2);
  EXPECT_FALSE(r.symmetric);
  EXPECT_GT(r.evenness, 0.5);
  EXPECT_TRUE(r.even_matches_symmetric);
  const std::vector<double> e1{1, 0, 0, 0};
  const std::vector<double> minus_e1{-1, 0, 0, 0};
  EXPECT_EQ(setpair_extension(f, e1), 1.0);
  EXPECT_EQ(setpair_extension(f, minus_e1), 0.0);
}

TEST(ExtensionProperties, HomogeneityAndAlgebra) {
  std::mt19937_64 rng(4);
  const SetPairFunction f = PairTable::random(5, 1).as_function();
  const SetPairFunction g = PairTable::random(5, 2).as_function();
  for (int i = 0; i < 200; ++i) {
    auto x = testing::random_vector(rng, 5, 0.2);
    auto x2 = x;
    for (double& v : x2) v *= 2.0;
    EXPECT_NEAR(setpair_extension(f, x2), 2.0 * setpair_extension(f, x), 1e-12);
    EXPECT_NEAR(setpair_extension(f + g, x), setpair_extension(f, x) + setpair_extension(g, x),
                1e-12);
    EXPECT_NEAR(setpair_extension(0.5 * f, x), 0.5 * setpair_extension(f, x), 1e-12);
  }
}

TEST(SetPairFunction, RejectsNegativeValues) {
  const SetPairFunction f("neg", 2, [](const SetPair&) { return -1.0; });
  EXPECT_THROW(f(SetPair(2)), InvalidArgument);
  EXPECT_THROW((-1.0) * f, InvalidArgument);
}

TEST(PairTable, TextRoundTrip) {
  const PairTable t = PairTable::random(3, 77);
  std::ostringstream out;
  write_pair_table(out, t);
  std::istringstream in(out.str());
  const PairTable back = parse_pair_table(in, 3);
  EXPECT_EQ(back.values(), t.values());
  EXPECT_EQ(t.at(0), 0.0);
}

TEST(PairTable, ParseErrors) {
  std::istringstream missing("0 0\n1 1\n");
  EXPECT_THROW(parse_pair_table(missing, 1), ParseError);
  std::istringstream negative("0 0\n1 -1\n2 1\n");
  EXPECT_THROW(parse_pair_table(negative, 1), ParseError);
  std::istringstream range("0 0\n1 1\n3 1\n");
  EXPECT_THROW(parse_pair_table(range, 1), ParseError);
  EXPECT_THROW(PairTable::random(13, 1), GuardExceeded);
}

}  // namespace
}  // namespace setpair
