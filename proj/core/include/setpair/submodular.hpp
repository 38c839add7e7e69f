#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "setpair/lovasz.hpp"
#include "setpair/setpair.hpp"

namespace setpair {

inline constexpr std::size_t kMaxExhaustiveCheckVertices = 8;
inline constexpr std::size_t kMaxSetFunctionCheckVertices = 10;

/// A failed inequality lhs >= rhs, reported only when lhs < rhs − tol with
/// tol = 1e-12·max(1, |rhs|).
///
/// operands[0], operands[1] are the inputs; operands[2], operands[3] the
/// pairs on the right-hand side. Nested and subset forms are reported
/// through their equivalent set-pairs (B = X_O ∖ X_I, or B = ∅).
struct ViolationCertificate {
  std::string kind;
  std::vector<SetPair> operands;
  double lhs = 0.0;
  double rhs = 0.0;
};

// f(A,B) + f(C,D) >= f((A∪C)∖(B∪D), (B∪D)∖(A∪C)) + f(A∩C, B∩D) over all
// pairs of pairs. Exhaustive; n <= kMaxExhaustiveCheckVertices.
std::optional<ViolationCertificate> check_pair_submodular(const PairTable& f);
std::optional<ViolationCertificate> check_pair_submodular(const SetPairFunction& f);
// Seeded random pairs of pairs, for ground sets past the exhaustive limit.
std::optional<ViolationCertificate> check_pair_submodular_sampled(const SetPairFunction& f,
                                                                  std::uint64_t trials,
                                                                  std::uint64_t seed);

struct StrictReport {
  std::optional<ViolationCertificate> violation;
  // First equality case whose pairs are not nested, if any.
  std::optional<ViolationCertificate> incomparable_equality;
  std::uint64_t equality_cases = 0;

  bool strict() const { return !violation && !incomparable_equality; }
};

// Pair submodularity where equality only occurs for nested pairs
// ((A,B) ⊆ (C,D) or the reverse). Equality means |lhs − rhs| <= tol.
StrictReport check_strict_pair_submodular(const PairTable& f);

enum class NestedForm {
  Lattice,    // p(X) + p(Y) >= p(X_I∩Y_I, X_O∩Y_O) + p(X_I∪Y_I, X_O∪Y_O)
  Corrected,  // the same with Z = (X_O∩Y_I∖X_I) ∪ (Y_O∩X_I∖Y_I) removed
};

// Checks p(X_I, X_O) = f(X_I, X_O ∖ X_I) in nested coordinates.
std::optional<ViolationCertificate> check_nested_submodular(const PairTable& f, NestedForm form);

// Submodularity in each slot separately:
//   f(A,B) + f(A,D) >= f(A,B∪D) + f(A,B∩D)   and
//   f(A,B) + f(C,B) >= f(A∪C,B) + f(A∩C,B).
std::optional<ViolationCertificate> check_partial_submodular(const PairTable& f);

struct ConvexityWitness {
  std::vector<double> x;
  std::vector<double> y;
  double midpoint = 0.0;  // f^L((x+y)/2)
  double average = 0.0;   // (f^L(x) + f^L(y)) / 2
};

// Midpoint-convexity probe of f^L: every indicator midpoint, then random
// midpoints until `trials` probes have run. Requires f(∅,∅) = 0.
std::optional<ConvexityWitness> convexity_probe(const PairTable& f, std::uint64_t trials,
                                                std::uint64_t seed);

// f(A) + f(B) >= f(A∪B) + f(A∩B); exhaustive, n <= 10.
std::optional<ViolationCertificate> original_submodular_check(const SetFunction& f);
// Midpoint probe of the original Lovász extension on random vectors.
std::optional<ConvexityWitness> original_convexity_probe(const SetFunction& f,
                                                         std::uint64_t trials,
                                                         std::uint64_t seed);

inline constexpr std::size_t kMaxDecompositionVertices = 3;

struct Decomposition {
  double value = 0.0;
  std::vector<SetPair> pairs;
  std::vector<double> weights;
};

// min Σ λ_P f(P) s.t. Σ λ_P 1_P = x, Σ λ_P <= budget, λ >= 0, solved
// exactly by enumerating LP bases. Only for n <= 3.
Decomposition decomposition_minimum(const SetPairFunction& f, std::span<const double> x,
                                    double budget);

// √(|A| + |B|)
SetPairFunction sqrt_cardinality(std::size_t n);

}  // namespace setpair
