#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "setpair/graph.hpp"
#include "setpair/lovasz.hpp"
#include "setpair/ratio_problem.hpp"
#include "setpair/vertex_set.hpp"

namespace setpair {

/// l blocks x⁽¹⁾…x⁽ˡ⁾ of n entries each, flattened block-major so entry
/// (i, j) sits at i·n + j (both 0-based).
struct BlockVector {
  std::size_t n = 0;
  std::size_t l = 0;
  std::vector<double> data;

  BlockVector() = default;
  BlockVector(std::size_t n_, std::size_t l_) : n(n_), l(l_), data(n_ * l_, 0.0) {}

  double& at(std::size_t block, std::size_t vertex) { return data.at(block * n + vertex); }
  double at(std::size_t block, std::size_t vertex) const { return data.at(block * n + vertex); }
  std::span<const double> block(std::size_t i) const { return {data.data() + i * n, n}; }
  double sup_norm() const;
};

// l lines of n decimals; '#' comments and blank lines ignored.
BlockVector parse_block_vector(std::istream& in, std::size_t n);
BlockVector read_block_vector(const std::string& path, std::size_t n);

/// Pairwise-disjoint parts covering the vertex set (parts may be empty).
struct KPartition {
  std::vector<VertexSet> parts;

  std::size_t n() const { return parts.empty() ? 0 : parts.front().universe(); }
  // Throws InvalidArgument unless the parts are disjoint and cover V.
  void validate(std::size_t n) const;
};

inline constexpr std::uint64_t kMaxKCutAssignments = 10'000'000;

// Smallest l with 3^l > k.
std::size_t default_levels(std::size_t k);

// Ternary code of each vertex at threshold t: digit i (weight 3^i) is 1
// when x⁽ⁱ⁺¹⁾_j > t, 2 when −x⁽ⁱ⁺¹⁾_j > t, else 0.
std::vector<std::uint64_t> vertex_codes(const BlockVector& x, double t);
// Codes grouped into parts; only codes that occur are present.
std::map<std::uint64_t, VertexSet> parts_at_threshold(const BlockVector& x, double t);

// F(T₁,T₂) = Σ_{top k codes} |∂A_c| and G(T₁,T₂) = Σ_{top k codes} vol(A_c)
// as set-pair functions on the ln-element ground set.
struct EncodedFunctions {
  SetPairFunction F;
  SetPairFunction G;
};
EncodedFunctions encoded_functions(const Graph& g, std::size_t k, std::size_t l);

// Integral form: the set-pair extension of the encoded F / G.
double kcut_FL_integral(const Graph& g, std::size_t k, const BlockVector& x);
double kcut_GL_integral(const Graph& g, std::size_t k, const BlockVector& x);

// Closed forms Σ d_j z_j − 2 Σ_edges w Σ_top z_uv^c and Σ d_j z_j.
double kcut_FL(const Graph& g, std::size_t k, const BlockVector& x);
double kcut_GL(const Graph& g, std::size_t k, const BlockVector& x);

// z_j: the first threshold at which vertex j's code drops below 3^l − k.
std::vector<double> vertex_exit_times(const BlockVector& x, std::size_t k);

// F^L / G^L; throws InfeasiblePoint(ExcludedSet) when every z_j = 0.
double kcut_ratio(const Graph& g, std::size_t k, const BlockVector& x);

// Part m (1-based) gets code 3^l − k + m − 1; digit 1 ↦ +1, 2 ↦ −1.
// l = 0 picks default_levels(k). Throws if the partition has more than k parts.
BlockVector encode_partition(const KPartition& p, std::size_t k, std::size_t l = 0);

// Σ|∂A_i| / Σ vol(A_i).
double partition_ratio(const Graph& g, const KPartition& p);

enum class PartRule {
  AllowEmpty,  // every labelled cover counts, empty parts included
  NonEmpty,    // all k parts must be nonempty
};

struct KCutResult {
  double value = 0.0;
  KPartition witness;
  std::uint64_t evaluations = 0;
};

// Exhaustive optimum over the k^n labellings; ties go to the
// lexicographically smallest labelling. Throws GuardExceeded if k^n > 10^7.
KCutResult kcut_discrete(const Graph& g, std::size_t k, Sense sense,
                         PartRule rule = PartRule::AllowEmpty);

}  // namespace setpair
