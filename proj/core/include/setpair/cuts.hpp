#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "setpair/graph.hpp"
#include "setpair/ratio_problem.hpp"
#include "setpair/setpair.hpp"

namespace setpair {

enum class CutKind {
  DualCheeger,     // max 2|E(A,B)| / vol(A∪B)
  Max3Cut,         // max 2·cut3(A,B,C) / vol(V)
  RatioMax3CutI,   // max 2·cut3(A,B,C) / (vol A + vol B)
  RatioMax3CutII,  // max 2·cut3(A,B,C) / max(vol(A∪B), vol C)
  MaxCut,          // max 2|∂S| / vol(V)
  Cheeger,         // min |∂S| / min(vol S, vol S^c)
  AntiCheeger,     // max |∂S| / max(vol S, vol S^c)
};

inline constexpr std::array<CutKind, 7> kAllCutKinds = {
    CutKind::DualCheeger, CutKind::Max3Cut, CutKind::RatioMax3CutI, CutKind::RatioMax3CutII,
    CutKind::MaxCut,      CutKind::Cheeger, CutKind::AntiCheeger};

inline constexpr std::size_t kMaxTwoCutVertices = 24;

// CLI names: dual-cheeger, max3cut, ratio-max3cut-1, ratio-max3cut-2,
// maxcut, cheeger, anti-cheeger.
std::string_view to_string(CutKind kind) noexcept;
std::optional<CutKind> parse_cut_kind(std::string_view name);
Sense sense_of(CutKind kind) noexcept;
// MaxCut, Cheeger and AntiCheeger optimize over subsets S.
bool is_two_cut(CutKind kind) noexcept;

/// Discrete optimum with its witness.
///
/// Two-cut kinds report S as witness.a and S^c as witness.b; the pair and
/// 3-cut kinds report (A, B) with C = V∖(A∪B).
struct CutResult {
  CutKind kind{};
  double value = 0.0;
  SetPair witness;
  std::uint64_t evaluations = 0;
};

// The defining ratio at a witness; nullopt outside the feasible family.
// For two-cut kinds the pair must be (S, S^c).
std::optional<double> discrete_value(const Graph& g, CutKind kind, const SetPair& witness);

// Exhaustive optimum; ties resolved towards the smaller witness_rank.
// Throws GuardExceeded past the size guard and InvalidArgument if vol(V) = 0.
CutResult discrete_optimum(const Graph& g, CutKind kind);

// The continuous objective whose optimum over x equals the discrete
// optimum. Throws InfeasiblePoint where the kind excludes x.
double continuous_objective(const Graph& g, CutKind kind, std::span<const double> x);

// Numerator/denominator set-pair functions whose pair optimum equals the
// discrete optimum, with closed-form extensions attached.
RatioProblem pair_ratio_problem(const Graph& g, CutKind kind);

// Maps a pair of the ratio problem to a witness of the kind's definition
// that is at least as good (for two-cut kinds the better of A and B).
SetPair witness_from_pair(const Graph& g, CutKind kind, const SetPair& pair);

}  // namespace setpair
