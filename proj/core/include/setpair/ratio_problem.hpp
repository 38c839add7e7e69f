#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "setpair/lovasz.hpp"
#include "setpair/setpair.hpp"

namespace setpair {

enum class Sense { Min, Max };

std::string_view to_string(Sense sense) noexcept;
Sense parse_sense(std::string_view text);

// Which nonzero vectors are admissible for the continuous ratio.
enum class Feasibility {
  NonZero,      // every x ≠ 0
  NonConstant,  // x not a multiple of 1; excludes (V,∅), (∅,V) in the pair domain
};

/// Ratio f/g of two set-pair functions, optimized over 𝒫₂(V) or over ℝⁿ
/// through their extensions.
///
/// numerator_ext / denominator_ext default to the generic sum-form
/// extension; cut problems plug in O(m) closed forms.
struct RatioProblem {
  using Extension = std::function<double(std::span<const double>)>;

  std::string name;
  SetPairFunction numerator;
  SetPairFunction denominator;
  Sense sense = Sense::Min;
  Feasibility feasible = Feasibility::NonZero;
  Extension numerator_ext;
  Extension denominator_ext;
  // Weights for centring starting points of nonconstant problems
  // (x ↦ x − (Σ wᵢxᵢ / Σ wᵢ)·1). Empty means uniform.
  std::vector<double> centring_weights;

  std::size_t n() const noexcept { return numerator.n(); }

  // nullopt when (A,B) is outside the feasible family or g(A,B) <= 0.
  std::optional<double> discrete_ratio(const SetPair& p) const;
  // Throws InfeasiblePoint for x = 0, constant x (when excluded) or a
  // vanishing denominator.
  double continuous_ratio(std::span<const double> x) const;
  double numerator_value(std::span<const double> x) const;
  double denominator_value(std::span<const double> x) const;

  // True when a beats b by more than the comparison tolerance.
  bool better(double a, double b) const;
};

RatioProblem make_ratio_problem(std::string name, SetPairFunction numerator,
                                SetPairFunction denominator, Sense sense,
                                Feasibility feasible = Feasibility::NonZero);

struct PairOptimum {
  double value = 0.0;
  SetPair witness;
  std::uint64_t evaluations = 0;
};

// Exhaustive optimum of the discrete ratio over all feasible pairs; ties go
// to the smaller witness_rank. Throws GuardExceeded past the enumeration
// limit and InvalidArgument if no pair is feasible.
PairOptimum pair_optimum(const RatioProblem& problem);

}  // namespace setpair
