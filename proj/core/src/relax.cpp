#include "setpair/relax.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "setpair/error.hpp"
#include "setpair/functionals.hpp"
#include "setpair/numeric.hpp"
#include "setpair/parallel.hpp"

namespace setpair {

namespace {

bool admissible(const RatioProblem& problem, std::span<const double> x) {
  bool zero = true;
  bool constant = true;
  for (double v : x) {
    zero = zero && v == 0.0;
    constant = constant && v == x[0];
  }
  if (zero) return false;
  return !(problem.feasible == Feasibility::NonConstant && constant);
}

// Ratio at x, or nothing if x is inadmissible or the denominator vanishes.
std::optional<double> try_ratio(const RatioProblem& problem, std::span<const double> x) {
  if (!admissible(problem, x)) return std::nullopt;
  const double g = problem.denominator_value(x);
  if (!(g > 1e-14)) return std::nullopt;
  return problem.numerator_value(x) / g;
}

void rescale(std::vector<double>& x) {
  const double m = sup_norm(x);
  if (m > 0.0) {
    for (double& v : x) v /= m;
  }
}

bool improves(const RatioProblem& problem, double candidate, double current, double tol) {
  const double margin = tol * std::max(1.0, std::fabs(current));
  return problem.sense == Sense::Max ? candidate > current + margin : candidate < current - margin;
}

}  // namespace

RoundResult threshold_round(const RatioProblem& problem, std::span<const double> x) {
  const ChainDecomposition chain = threshold_pairs(x);
  std::optional<RoundResult> best;
  std::uint64_t best_rank = 0;
  for (std::size_t i = 0; i < chain.pairs.size(); ++i) {
    if (chain.gaps[i] <= 0.0) continue;
    const auto value = problem.discrete_ratio(chain.pairs[i]);
    if (!value) continue;
    const std::uint64_t rank = witness_rank(chain.pairs[i]);
    if (!best || problem.better(*value, best->value) ||
        (!problem.better(best->value, *value) && rank < best_rank)) {
      best = RoundResult{chain.pairs[i], *value};
      best_rank = rank;
    }
  }
  if (!best) {
    throw InfeasiblePoint(Infeasibility::ExcludedSet,
                          problem.name + ": no feasible threshold pair");
  }
  return *best;
}

DescentResult local_descent(const RatioProblem& problem, std::span<const double> x0,
                            const DescentOptions& opts) {
  const std::size_t n = problem.n();
  if (x0.size() != n) throw InvalidArgument("local_descent: dimension mismatch");
  DescentResult result;
  result.x.assign(x0.begin(), x0.end());
  for (double v : result.x) {
    if (!std::isfinite(v)) throw InvalidArgument("local_descent: non-finite start");
  }
  rescale(result.x);
  result.value = problem.continuous_ratio(result.x);
  result.trace.push_back(result.value);
  const double sign = problem.sense == Sense::Max ? -1.0 : 1.0;  // minimize sign·h

  std::vector<double> candidates;
  for (; result.iterations < opts.max_iters; ++result.iterations) {
    bool moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      const double lambda = result.value;
      const double keep = result.x[i];
      double reach = 0.0;
      candidates.assign(1, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        candidates.push_back(std::fabs(result.x[j]));
        candidates.push_back(-std::fabs(result.x[j]));
        reach = std::max(reach, std::fabs(result.x[j]));
      }
      reach = 2.0 * std::max(reach, std::fabs(keep));
      candidates.push_back(reach);
      candidates.push_back(-reach);

      // Dinkelbach step: the breakpoint with the best parametric objective
      // among those that strictly improve the ratio.
      double best_h = 0.0;
      std::optional<double> best_pos;
      std::optional<double> best_ratio;
      for (double c : candidates) {
        if (c == keep) continue;
        result.x[i] = c;
        if (!admissible(problem, result.x)) continue;
        const double num = problem.numerator_value(result.x);
        const double den = problem.denominator_value(result.x);
        if (!(den > 1e-14)) continue;
        const double ratio = num / den;
        if (!improves(problem, ratio, lambda, opts.tol)) continue;
        const double h = sign * (num - lambda * den);
        if (!best_pos || h < best_h) {
          best_h = h;
          best_pos = c;
          best_ratio = ratio;
        }
      }
      if (best_pos) {
        result.x[i] = *best_pos;
        result.value = *best_ratio;
        moved = true;
      } else {
        result.x[i] = keep;
      }
    }
    rescale(result.x);
    if (moved) {
      // Recompute after rescaling so the reported value matches x exactly.
      result.value = problem.continuous_ratio(result.x);
    }
    result.trace.push_back(result.value);
    if (!moved) break;
  }
  return result;
}

namespace {

struct StartOutcome {
  bool ok = false;
  RoundResult rounded;
  std::uint64_t rank = 0;
  DescentResult descent;
  std::size_t iterations = 0;
};

std::vector<double> start_point(const RatioProblem& problem, std::size_t idx,
                                const SolveOptions& opts) {
  const std::size_t n = problem.n();
  std::vector<double> x(n, 0.0);
  if (idx < opts.restarts) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(idx)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (double& v : x) v = normal(rng);
  } else {
    const std::size_t unit = idx - opts.restarts;
    x[unit / 2] = unit % 2 == 0 ? 1.0 : -1.0;
  }
  if (problem.feasible == Feasibility::NonConstant) {
    double wsum = 0.0;
    double wx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = problem.centring_weights.empty() ? 1.0 : problem.centring_weights[i];
      wsum += w;
      wx += w * x[i];
    }
    if (wsum > 0.0) {
      for (double& v : x) v -= wx / wsum;
    }
  }
  rescale(x);
  return x;
}

StartOutcome run_start(const RatioProblem& problem, std::size_t idx, const SolveOptions& opts) {
  StartOutcome out;
  const std::vector<double> x0 = start_point(problem, idx, opts);
  if (!try_ratio(problem, x0)) return out;
  out.descent = local_descent(problem, x0, opts.descent);
  out.iterations = out.descent.iterations;
  out.rounded = threshold_round(problem, out.descent.x);
  out.ok = true;
  // Polish: restart from the rounded indicator while that pays off.
  for (int round = 0; round < 16; ++round) {
    const std::vector<double> ind = indicator(out.rounded.pair);
    if (!try_ratio(problem, ind)) break;
    DescentResult again = local_descent(problem, ind, opts.descent);
    out.iterations += again.iterations;
    const RoundResult next = threshold_round(problem, again.x);
    if (!problem.better(next.value, out.rounded.value)) break;
    out.rounded = next;
    out.descent = std::move(again);
  }
  out.rank = witness_rank(out.rounded.pair);
  return out;
}

}  // namespace

SolveReport multi_start_solve(const RatioProblem& problem, const SolveOptions& opts) {
  if (opts.restarts == 0) throw InvalidArgument("multi_start_solve: restarts must be >= 1");
  const std::size_t starts = opts.restarts + 2 * problem.n();
  std::vector<StartOutcome> outcomes(starts);
  parallel_for_chunks(starts, 1, [&](std::size_t, std::uint64_t begin, std::uint64_t) {
    outcomes[begin] = run_start(problem, begin, opts);
  });

  SolveReport report;
  const StartOutcome* best = nullptr;
  for (const StartOutcome& o : outcomes) {
    report.iterations += o.iterations;
    if (!o.ok) continue;
    ++report.restarts;
    if (best == nullptr || problem.better(o.rounded.value, best->rounded.value) ||
        (!problem.better(best->rounded.value, o.rounded.value) && o.rank < best->rank)) {
      best = &o;
    }
  }
  if (best == nullptr) throw InvalidArgument(problem.name + ": no admissible starting point");
  report.best_value = best->rounded.value;
  report.rounded = best->rounded.pair;
  report.best_vector = best->descent.x;
  report.continuous_value = best->descent.value;
  report.trace = best->descent.trace;
  return report;
}

}  // namespace setpair
