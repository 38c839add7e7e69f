#pragma once

#include <span>
#include <string>
#include <string_view>

#include "setpair/graph.hpp"
#include "setpair/lovasz.hpp"

namespace setpair {

// Σ_{edges} w |x_u − x_v|
double tv(const Graph& g, std::span<const double> x);
// Σ_{edges} w |x_u + x_v|
double iplus(const Graph& g, std::span<const double> x);
// Σ_{edges} w ||x_u| − |x_v||
double ihat(const Graph& g, std::span<const double> x);
// Σ d_i |x_i|
double dnorm1(const Graph& g, std::span<const double> x);
double sup_norm(std::span<const double> x);

struct MedianDeviation {
  double value = 0.0;      // min_α Σ d_i |v_i − α|
  double minimizer = 0.0;  // degree-weighted median of v
};

// Weighted median by sorting (v_i, i) ascending and taking the first k with
// Σ_{j≤k} d ≥ vol/2. Returns {0, 0} when vol(V) = 0.
MedianDeviation median_dev(const Graph& g, std::span<const double> v);

enum class TableRow { F1, F2, G1, G2, G3 };

std::string_view to_string(TableRow row) noexcept;
// Accepts "F1", "F2", "G1", "G2", "G3"; throws InvalidArgument otherwise.
TableRow parse_table_row(std::string_view name);

// F1 = |∂A|+|∂B|, F2 = |E(A,B)|, G1 = vol(V), G2 = vol(A)+vol(B),
// G3 = Σ_{X∈{A,B}} min(vol X, vol X^c).
SetPairFunction table_function(const Graph& g, TableRow row);

// Closed-form extensions: F1 → I, F2 → ½‖x‖ − ½I⁺, G1 → vol(V)‖x‖∞,
// G2 → ‖x‖, G3 → min_α ‖x − α1‖.
double table_extension_closed(const Graph& g, TableRow row, std::span<const double> x);

// min_α ‖|x| − α1‖, the magnitude variant of the G3 closed form. Kept for
// comparison: it is not the extension of G3 (x = (1,−1) on one edge gives
// 0 here against 2 for the extension).
double g3_extension_magnitude(const Graph& g, std::span<const double> x);

}  // namespace setpair
