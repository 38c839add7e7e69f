#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "setpair/ratio_problem.hpp"
#include "setpair/setpair.hpp"

namespace setpair {

struct RoundResult {
  SetPair pair;
  double value = 0.0;  // discrete ratio at pair
};

// Best feasible threshold pair of x (positive-gap links only); ties go to
// the smaller witness_rank. Throws InfeasiblePoint if no link is feasible.
RoundResult threshold_round(const RatioProblem& problem, std::span<const double> x);

struct DescentOptions {
  std::size_t max_iters = 200;
  double tol = 1e-10;  // minimum relative ratio improvement for a move
};

struct DescentResult {
  std::vector<double> x;  // rescaled to ‖x‖∞ = 1
  double value = 0.0;     // continuous ratio at x
  std::size_t iterations = 0;
  std::vector<double> trace;  // ratio after each sweep, starting value first
};

// Dinkelbach coordinate descent. With λ the current ratio, each coordinate
// moves to the breakpoint {0, ±|x_j|, ±2‖x‖∞} that best improves
// numerator − λ·denominator; sweeps repeat until no move improves the
// ratio by more than tol (relative) or max_iters is reached.
DescentResult local_descent(const RatioProblem& problem, std::span<const double> x0,
                            const DescentOptions& opts = {});

struct SolveOptions {
  std::size_t restarts = 50;
  std::uint64_t seed = 7;
  DescentOptions descent;
};

struct SolveReport {
  double best_value = 0.0;  // best rounded discrete ratio
  SetPair rounded;
  std::vector<double> best_vector;
  double continuous_value = 0.0;  // ratio at best_vector
  std::size_t iterations = 0;     // summed over all starts
  std::size_t restarts = 0;       // starts actually run
  std::vector<double> trace;      // trace of the winning start
};

// Descends from `restarts` seeded points on the unit sphere plus the 2n
// signed unit vectors, rounds each terminal vector, and re-descends from
// the rounded indicator while that improves. Deterministic in
// (restarts, seed) regardless of worker count.
SolveReport multi_start_solve(const RatioProblem& problem, const SolveOptions& opts = {});

}  // namespace setpair
