#include "setpair/ratio_problem.hpp"

#include <cmath>

#include "setpair/error.hpp"
#include "setpair/numeric.hpp"
#include "setpair/parallel.hpp"

namespace setpair {

std::string_view to_string(Sense sense) noexcept { return sense == Sense::Min ? "min" : "max"; }

Sense parse_sense(std::string_view text) {
  if (text == "min") return Sense::Min;
  if (text == "max") return Sense::Max;
  throw InvalidArgument("sense must be 'min' or 'max', got '" + std::string(text) + "'");
}

std::optional<double> RatioProblem::discrete_ratio(const SetPair& p) const {
  if (p.empty()) return std::nullopt;
  if (feasible == Feasibility::NonConstant && (p.a.count() == p.n() || p.b.count() == p.n())) {
    return std::nullopt;
  }
  const double g = denominator(p);
  if (!(g > 0.0)) return std::nullopt;
  return numerator(p) / g;
}

double RatioProblem::numerator_value(std::span<const double> x) const {
  return numerator_ext ? numerator_ext(x) : setpair_extension(numerator, x);
}

double RatioProblem::denominator_value(std::span<const double> x) const {
  return denominator_ext ? denominator_ext(x) : setpair_extension(denominator, x);
}

double RatioProblem::continuous_ratio(std::span<const double> x) const {
  if (x.size() != n()) throw InvalidArgument(name + ": vector dimension mismatch");
  bool zero = true;
  bool constant = true;
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidArgument(name + ": non-finite entry");
    zero = zero && v == 0.0;
    constant = constant && v == x[0];
  }
  if (zero) throw InfeasiblePoint(Infeasibility::ZeroVector, name + " requires x != 0");
  if (feasible == Feasibility::NonConstant && constant) {
    throw InfeasiblePoint(Infeasibility::ConstantVector, name + " requires nonconstant x");
  }
  const double g = denominator_value(x);
  if (!(g > 0.0)) throw InfeasiblePoint(Infeasibility::ZeroDenominator, name);
  return numerator_value(x) / g;
}

bool RatioProblem::better(double a, double b) const {
  if (approx_equal(a, b)) return false;
  return sense == Sense::Max ? a > b : a < b;
}

RatioProblem make_ratio_problem(std::string name, SetPairFunction numerator,
                                SetPairFunction denominator, Sense sense, Feasibility feasible) {
  if (numerator.n() != denominator.n()) throw InvalidArgument("ratio problem: size mismatch");
  RatioProblem p;
  p.name = std::move(name);
  p.numerator = std::move(numerator);
  p.denominator = std::move(denominator);
  p.sense = sense;
  p.feasible = feasible;
  return p;
}

PairOptimum pair_optimum(const RatioProblem& problem) {
  const SetPairRange range = enumerate_setpairs(problem.n());
  struct Partial {
    bool found = false;
    PairOptimum best;
    std::uint64_t rank = 0;
  };
  auto take = [&](Partial& acc, double value, const SetPair& p, std::uint64_t evaluations) {
    const std::uint64_t rank = witness_rank(p);
    acc.best.evaluations += evaluations;
    if (!acc.found || problem.better(value, acc.best.value) ||
        (!problem.better(acc.best.value, value) && rank < acc.rank)) {
      acc.found = true;
      acc.best.value = value;
      acc.best.witness = p;
      acc.rank = rank;
    }
  };
  Partial result = chunked_reduce(
      range.size(), 4096, Partial{},
      [&](std::uint64_t begin, std::uint64_t end) {
        Partial part;
        SetPairRange::iterator it(problem.n(), begin);
        for (std::uint64_t code = begin; code < end; ++code, ++it) {
          if (const auto r = problem.discrete_ratio(*it)) take(part, *r, *it, 1);
        }
        return part;
      },
      [&](Partial acc, Partial part) {
        const std::uint64_t evaluations = part.best.evaluations;
        if (part.found) {
          take(acc, part.best.value, part.best.witness, evaluations);
        } else {
          acc.best.evaluations += evaluations;
        }
        return acc;
      });
  if (!result.found) throw InvalidArgument(problem.name + ": no feasible set-pair");
  return result.best;
}

}  // namespace setpair
