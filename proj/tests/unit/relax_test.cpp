#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "setpair/cuts.hpp"
#include "setpair/error.hpp"
#include "setpair/parallel.hpp"
#include "setpair/relax.hpp"

namespace setpair {
namespace {

SetPair pair(std::size_t n, std::initializer_list<std::size_t> a,
             std::initializer_list<std::size_t> b) {
  return SetPair(VertexSet(n, a), VertexSet(n, b));
}

bool no_worse(Sense sense, double candidate, double reference) {
  return sense == Sense::Max ? candidate >= reference - 1e-9 : candidate <= reference + 1e-9;
}

TEST(ThresholdRound, MaxCutOnTriangle) {
  const Graph g = testing::k3();
  const RatioProblem p = pair_ratio_problem(g, CutKind::MaxCut);
  const std::vector<double> x{0.9, 1.1, -1};
  const RoundResult r = threshold_round(p, x);
  const SetPair w = witness_from_pair(g, CutKind::MaxCut, r.pair);
  EXPECT_NEAR(*discrete_value(g, CutKind::MaxCut, w), 2.0 / 3.0, 1e-12);
  EXPECT_TRUE(no_worse(Sense::Max, r.value, p.continuous_ratio(x)));
}

TEST(ThresholdRound, IndicatorRoundsToItself) {
  const Graph g = testing::random_connected_graph(1, 5);
  const RatioProblem p = pair_ratio_problem(g, CutKind::DualCheeger);
  for (const SetPair& s : enumerate_setpairs(5)) {
    if (s.empty()) continue;
    EXPECT_EQ(threshold_round(p, indicator(s)).pair, s);
  }
}

TEST(ThresholdRound, TwoCandidateExample) {
  const Graph g = testing::k3();
  const RatioProblem p = pair_ratio_problem(g, CutKind::DualCheeger);
  const std::vector<double> x{2, -1, 0};
  const double a = *p.discrete_ratio(pair(3, {0}, {1}));
  const double b = *p.discrete_ratio(pair(3, {0}, {}));
  const RoundResult r = threshold_round(p, x);
  EXPECT_EQ(r.value, std::max(a, b));
  EXPECT_EQ(r.pair, a >= b ? pair(3, {0}, {1}) : pair(3, {0}, {}));
}

TEST(ThresholdRound, ZeroVectorHasNoFeasibleLink) {
  const RatioProblem p = pair_ratio_problem(testing::k3(), CutKind::DualCheeger);
  const std::vector<double> x(3, 0.0);
  EXPECT_THROW(threshold_round(p, x), InfeasiblePoint);
}

TEST(ThresholdRound, NeverWorseThanSource) {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = testing::random_connected_graph(seed, 6);
    for (CutKind kind : kAllCutKinds) {
      const RatioProblem p = pair_ratio_problem(g, kind);
      for (int i = 0; i < 200; ++i) {
        const auto x = testing::random_vector(rng, 6, 0.2);
        double c = 0.0;
        try {
          c = p.continuous_ratio(x);
        } catch (const InfeasiblePoint&) {
          continue;
        }
        EXPECT_TRUE(no_worse(p.sense, threshold_round(p, x).value, c)) << to_string(kind);
      }
    }
  }
}

TEST(LocalDescent, StopsAtGlobalOptimum) {
  const Graph g = testing::k3();
  const RatioProblem p = pair_ratio_problem(g, CutKind::DualCheeger);
  const std::vector<double> x0{1, 1, -1};
  const DescentResult r = local_descent(p, x0);
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_NEAR(r.value, 2.0 / 3.0, 1e-12);
}

TEST(LocalDescent, DualCheegerConverges) {
  const RatioProblem p = pair_ratio_problem(testing::k3(), CutKind::DualCheeger);
  const std::vector<double> x0{0.3, 0.7, -1};
  DescentOptions opts;
  opts.max_iters = 50;
  const DescentResult r = local_descent(p, x0, opts);
  EXPECT_NEAR(r.value, 2.0 / 3.0, 1e-9);
  EXPECT_LE(r.iterations, 50u);
}

TEST(LocalDescent, TraceIsMonotone) {
  std::mt19937_64 rng(18);
  for (int run = 0; run < 100; ++run) {
    const Graph g = testing::random_connected_graph(run, 3 + run % 6);
    const CutKind kind = kAllCutKinds[run % kAllCutKinds.size()];
    const RatioProblem p = pair_ratio_problem(g, kind);
    auto x = testing::random_vector(rng, g.n());
    try {
      p.continuous_ratio(x);
    } catch (const InfeasiblePoint&) {
      continue;
    }
    const DescentResult r = local_descent(p, x);
    ASSERT_FALSE(r.trace.empty());
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      EXPECT_TRUE(no_worse(p.sense, r.trace[i], r.trace[i - 1])) << to_string(kind);
    }
    double sup = 0.0;
    for (double v : r.x) sup = std::max(sup, std::abs(v));
    EXPECT_NEAR(sup, 1.0, 1e-12);
  }
}

TEST(MultiStartSolve, TriangleAndCycle) {
  SolveOptions opts;
  opts.restarts = 20;
  opts.seed = 1;
  const SolveReport maxcut = multi_start_solve(pair_ratio_problem(testing::k3(), CutKind::MaxCut), opts);
  EXPECT_NEAR(maxcut.best_value, 2.0 / 3.0, 1e-9);
  const SolveReport dual = multi_start_solve(pair_ratio_problem(testing::c4(), CutKind::DualCheeger));
  EXPECT_NEAR(dual.best_value, 1.0, 1e-9);
  EXPECT_TRUE(no_worse(Sense::Max, dual.best_value, dual.continuous_value));
}

TEST(MultiStartSolve, AttainsOracleOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = testing::random_connected_graph(seed, 4 + seed % 4);
    for (CutKind kind : kAllCutKinds) {
      const SolveReport r = multi_start_solve(pair_ratio_problem(g, kind));
      EXPECT_NEAR(r.best_value, testing::brute_cut_optimum(g, kind), 1e-9) << to_string(kind);
    }
  }
}

TEST(MultiStartSolve, DeterministicAcrossWorkerCounts) {
  const Graph g = testing::random_connected_graph(9, 7);
  const RatioProblem p = pair_ratio_problem(g, CutKind::RatioMax3CutII);
  set_worker_count(1);
  const SolveReport a = multi_start_solve(p);
  set_worker_count(8);
  const SolveReport b = multi_start_solve(p);
  set_worker_count(0);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.rounded, b.rounded);
  EXPECT_EQ(a.best_vector, b.best_vector);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.trace, b.trace);
}

TEST(MultiStartSolve, CheegerStartsAreNonconstant) {
  const Graph g = testing::random_connected_graph(10, 6);
  const SolveReport r = multi_start_solve(pair_ratio_problem(g, CutKind::Cheeger));
  EXPECT_NEAR(r.best_value, testing::brute_cut_optimum(g, CutKind::Cheeger), 1e-9);
}

}  // namespace
}  // namespace setpair
