#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "setpair/error.hpp"
#include "setpair/functionals.hpp"
#include "setpair/lovasz.hpp"
#include "setpair/submodular.hpp"

namespace setpair {
namespace {

SetPair pair(std::size_t n, std::initializer_list<std::size_t> a,
             std::initializer_list<std::size_t> b) {
  return SetPair(VertexSet(n, a), VertexSet(n, b));
}

SetPairFunction a_is_singleton(std::size_t n) {
  return SetPairFunction("[|A|=1]", n, [](const SetPair& p) { return p.a.count() == 1 ? 1.0 : 0.0; });
}

// Independent restatement of the pair inequality, for cross-checking.
bool brute_pair_submodular(const PairTable& t) {
  const std::size_t n = t.n();
  for (const SetPair& x : enumerate_setpairs(n)) {
    for (const SetPair& y : enumerate_setpairs(n)) {
      const VertexSet ac = x.a | y.a;
      const VertexSet bd = x.b | y.b;
      const SetPair join(ac - bd, bd - ac);
      const SetPair meet(x.a & y.a, x.b & y.b);
      if (t(x) + t(y) < t(join) + t(meet) - 1e-12) return false;
    }
  }
  return true;
}

// Random pair-submodular tables: nonnegative combinations of known
// pair-submodular pieces (cut, volume and √(|A|+|B|)).
PairTable random_submodular_table(std::uint64_t seed, std::size_t n) {
  const Graph g = testing::random_connected_graph(seed, n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SetPairFunction f = unit(rng) * sqrt_cardinality(n);
  f = f + unit(rng) * table_function(g, TableRow::F1);
  f = f + unit(rng) * table_function(g, TableRow::G2);
  return PairTable::tabulate(f);
}

TEST(PairSubmodular, ConstantPasses) {
  EXPECT_FALSE(check_pair_submodular(table_function(testing::k3(), TableRow::G1)).has_value());
}

TEST(PairSubmodular, SingletonIndicatorViolates) {
  const auto cert = check_pair_submodular(a_is_singleton(2));
  ASSERT_TRUE(cert.has_value());
  EXPECT_LT(cert->lhs, cert->rhs);
  // The hand-derived instance: ({1,2},∅) with (∅,{1}) joins to ({2},∅).
  const PairTable t = PairTable::tabulate(a_is_singleton(2));
  const SetPair x = pair(2, {0, 1}, {});
  const SetPair y = pair(2, {}, {0});
  EXPECT_EQ(t(x) + t(y), 0.0);
  EXPECT_EQ(t(pair(2, {1}, {})) + t(SetPair(2)), 1.0);
}

TEST(PairSubmodular, CertificateIsReproducible) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PairTable t = PairTable::random(3, seed);
    const auto cert = check_pair_submodular(t);
    EXPECT_EQ(cert.has_value(), !brute_pair_submodular(t));
    if (!cert) continue;
    ASSERT_EQ(cert->operands.size(), 4u);
    EXPECT_NEAR(cert->lhs, t(cert->operands[0]) + t(cert->operands[1]), 1e-12);
    EXPECT_NEAR(cert->rhs, t(cert->operands[2]) + t(cert->operands[3]), 1e-12);
  }
}

TEST(PairSubmodular, TableFunctionsAndSqrtCardinality) {
  const Graph g = testing::random_connected_graph(3, 5);
  for (TableRow row : {TableRow::F1, TableRow::G1, TableRow::G2}) {
    EXPECT_FALSE(check_pair_submodular(table_function(g, row)).has_value()) << to_string(row);
  }
  EXPECT_FALSE(check_pair_submodular(sqrt_cardinality(5)).has_value());
}

TEST(PairSubmodular, SampledFindsViolation) {
  EXPECT_TRUE(check_pair_submodular_sampled(a_is_singleton(10), 20000, 3).has_value());
  EXPECT_FALSE(check_pair_submodular_sampled(sqrt_cardinality(10), 5000, 3).has_value());
}

TEST(StrictSubmodular, SqrtCardinality) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const StrictReport r = check_strict_pair_submodular(PairTable::tabulate(sqrt_cardinality(n)));
    EXPECT_TRUE(r.strict()) << n;
    EXPECT_GT(r.equality_cases, 0u);
  }
}

TEST(StrictSubmodular, ModularFunctionIsNotStrict) {
  const Graph g = testing::k3();
  const StrictReport r = check_strict_pair_submodular(PairTable::tabulate(table_function(g, TableRow::G2)));
  EXPECT_FALSE(r.violation.has_value());
  EXPECT_TRUE(r.incomparable_equality.has_value());
}

TEST(NestedSubmodular, CorrectedFormAgreesWithPairForm) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PairTable t = seed % 2 == 0 ? PairTable::random(4, seed) : random_submodular_table(seed, 4);
    EXPECT_EQ(check_nested_submodular(t, NestedForm::Corrected).has_value(),
              check_pair_submodular(t).has_value())
        << seed;
  }
}

TEST(NestedSubmodular, ConstantPasses) {
  const PairTable t(3, std::vector<double>(27, 2.0));
  EXPECT_FALSE(check_nested_submodular(t, NestedForm::Lattice).has_value());
  EXPECT_FALSE(check_nested_submodular(t, NestedForm::Corrected).has_value());
}

TEST(NestedSubmodular, LatticeFormDiffersFromPairForm) {
  // Search for tables where the lattice form holds but the pair form fails,
  // and the reverse.
  bool lattice_not_pair = false;
  bool pair_not_lattice = false;
  for (std::uint64_t seed = 1; seed <= 20000 && !(lattice_not_pair && pair_not_lattice); ++seed) {
    // f(A,B) = φ(|A|, |B|) with small integer φ and φ(0,0) = 0.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> level(0, 3);
    double phi[4][4];
    for (auto& row : phi) {
      for (double& v : row) v = level(rng);
    }
    phi[0][0] = 0.0;
    std::vector<double> values(27);
    for (std::uint64_t code = 0; code < 27; ++code) {
      const SetPair p = pair_from_code(code, 3);
      values[code] = phi[p.a.count()][p.b.count()];
    }
    const PairTable t(3, values);
    const bool lattice = !check_nested_submodular(t, NestedForm::Lattice).has_value();
    const bool pairwise = !check_pair_submodular(t).has_value();
    lattice_not_pair |= lattice && !pairwise;
    pair_not_lattice |= pairwise && !lattice;
  }
  EXPECT_TRUE(lattice_not_pair);
  EXPECT_TRUE(pair_not_lattice);
}

TEST(PartialSubmodular, Examples) {
  EXPECT_FALSE(
      check_partial_submodular(PairTable::tabulate(table_function(testing::k3(), TableRow::G2)))
          .has_value());
  const SetPairFunction b_single("[|B|=1]", 3,
                                 [](const SetPair& p) { return p.b.count() == 1 ? 1.0 : 0.0; });
  const auto cert = check_partial_submodular(PairTable::tabulate(b_single));
  ASSERT_TRUE(cert.has_value());
  // B={1,2}, D={2,3}: 0 + 0 against f(∅,{1,2,3}) + f(∅,{2}) = 1.
  const PairTable t = PairTable::tabulate(b_single);
  EXPECT_EQ(t(pair(3, {}, {0, 1})) + t(pair(3, {}, {1, 2})), 0.0);
  EXPECT_EQ(t(pair(3, {}, {0, 1, 2})) + t(pair(3, {}, {1})), 1.0);
}

TEST(PartialSubmodular, ImpliedByPairSubmodularity) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const PairTable t = random_submodular_table(seed, 4);
    ASSERT_FALSE(check_pair_submodular(t).has_value());
    EXPECT_FALSE(check_partial_submodular(t).has_value()) << seed;
  }
}

TEST(ConvexityProbe, SubmodularTablesPass) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    PairTable t = random_submodular_table(seed, 4);
    // Shift so that f(∅,∅) = 0 while keeping values nonnegative.
    std::vector<double> v = t.values();
    const double base = v[0];
    for (double& e : v) e = std::max(0.0, e - base);
    const PairTable shifted(4, v);
    if (check_pair_submodular(shifted)) continue;
    EXPECT_FALSE(convexity_probe(shifted, 2000, seed).has_value()) << seed;
  }
}

TEST(ConvexityProbe, ViolationFoundAtIndicators) {
  const PairTable t = PairTable::tabulate(a_is_singleton(3));
  const auto cert = check_pair_submodular(t);
  ASSERT_TRUE(cert.has_value());
  const auto w = convexity_probe(t, 100, 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_GT(w->midpoint, w->average);
}

TEST(ConvexityProbe, RequiresZeroAtEmpty) {
  const PairTable t(2, std::vector<double>(9, 1.0));
  EXPECT_THROW(convexity_probe(t, 10, 1), InvalidArgument);
}

TEST(ConvexityProbe, IndicatorIdentity) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const SetPair& x : enumerate_setpairs(n)) {
      for (const SetPair& y : enumerate_setpairs(n)) {
        const VertexSet ac = x.a | y.a;
        const VertexSet bd = x.b | y.b;
        const auto lhs_x = indicator(x);
        const auto lhs_y = indicator(y);
        const auto j = indicator(SetPair(ac - bd, bd - ac));
        const auto m = indicator(SetPair(x.a & y.a, x.b & y.b));
        for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(lhs_x[i] + lhs_y[i], j[i] + m[i]);
      }
    }
  }
}

TEST(OriginalSubmodular, Examples) {
  const Graph g = testing::random_connected_graph(2, 8);
  const SetFunction cut("cut", 8, [&](const VertexSet& s) { return g.boundary_weight(s); });
  EXPECT_FALSE(original_submodular_check(cut).has_value());
  EXPECT_FALSE(original_convexity_probe(cut, 2000, 1).has_value());

  const SetFunction constant("c", 4, [](const VertexSet&) { return 3.0; });
  EXPECT_FALSE(original_submodular_check(constant).has_value());

  const SetFunction single("[|A|=1]", 3, [](const VertexSet& s) { return s.count() == 1 ? 1.0 : 0.0; });
  const auto cert = original_submodular_check(single);
  ASSERT_TRUE(cert.has_value());
  EXPECT_LT(cert->lhs, cert->rhs);
  // {1,2} and {2,3}: 0 + 0 against f({1,2,3}) + f({2}) = 1.
  EXPECT_EQ(single(VertexSet(3, {0, 1})) + single(VertexSet(3, {1, 2})), 0.0);
  EXPECT_EQ(single(VertexSet::full(3)) + single(VertexSet(3, {1})), 1.0);
  EXPECT_TRUE(original_convexity_probe(single, 5000, 1).has_value());
}

TEST(Decomposition, StrictlySubmodularMinimumIsTheExtension) {
  const SetPairFunction f = sqrt_cardinality(3);
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = testing::random_vector(rng, 3);
    const Decomposition d = decomposition_minimum(f, x, sup_norm(x));
    EXPECT_NEAR(d.value, setpair_extension(f, x), 1e-9);
    std::vector<double> rebuilt(3, 0.0);
    double weight = 0.0;
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
      const auto ind = indicator(d.pairs[i]);
      for (std::size_t j = 0; j < 3; ++j) rebuilt[j] += d.weights[i] * ind[j];
      weight += d.weights[i];
    }
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(rebuilt[j], x[j], 1e-9);
    EXPECT_LE(weight, sup_norm(x) + 1e-9);
  }
}

TEST(Decomposition, Guard) {
  const std::vector<double> x(4, 1.0);
  EXPECT_THROW(decomposition_minimum(sqrt_cardinality(4), x, 1.0), GuardExceeded);
}

}  // namespace
}  // namespace setpair
