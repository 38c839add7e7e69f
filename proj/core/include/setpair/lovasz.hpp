#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "setpair/setpair.hpp"
#include "setpair/vertex_set.hpp"

namespace setpair {

/// Nonnegative function on set-pairs over a fixed ground set of size n.
///
/// A thin handle around a pure callable; copies share the callable, and
/// evaluation must be safe from many threads at once. Every call checks
/// the result is finite and nonnegative.
class SetPairFunction {
 public:
  using Fn = std::function<double(const SetPair&)>;

  SetPairFunction() = default;
  SetPairFunction(std::string name, std::size_t n, Fn fn,
                  std::optional<bool> symmetric_hint = std::nullopt);

  double operator()(const SetPair& p) const;
  const std::string& name() const noexcept { return name_; }
  std::size_t n() const noexcept { return n_; }
  std::optional<bool> symmetric_hint() const noexcept { return symmetric_; }

 private:
  std::string name_;
  std::size_t n_ = 0;
  std::shared_ptr<const Fn> fn_;
  std::optional<bool> symmetric_;
};

SetPairFunction operator+(const SetPairFunction& f, const SetPairFunction& g);
// Requires c >= 0.
SetPairFunction operator*(double c, const SetPairFunction& f);

/// Nonnegative function on subsets (for the original extension).
class SetFunction {
 public:
  using Fn = std::function<double(const VertexSet&)>;

  SetFunction() = default;
  SetFunction(std::string name, std::size_t n, Fn fn);

  double operator()(const VertexSet& s) const;
  const std::string& name() const noexcept { return name_; }
  std::size_t n() const noexcept { return n_; }

 private:
  std::string name_;
  std::size_t n_ = 0;
  std::shared_ptr<const Fn> fn_;
};

inline constexpr std::size_t kMaxTabulatedVertices = 12;

/// Dense table of a set-pair function indexed by pair_code().
class PairTable {
 public:
  PairTable() = default;
  PairTable(std::size_t n, std::vector<double> values);

  static PairTable tabulate(const SetPairFunction& f);
  // Uniform [0,1) values; entry (∅,∅) forced to zero when requested.
  static PairTable random(std::size_t n, std::uint64_t seed, bool zero_at_empty = true);

  std::size_t n() const noexcept { return n_; }
  const std::vector<double>& values() const noexcept { return *values_; }
  double at(std::uint64_t code) const { return values_->at(code); }
  double operator()(const SetPair& p) const { return (*values_)[pair_code(p)]; }
  double max_value() const;

  SetPairFunction as_function(std::string name = "table") const;

 private:
  std::size_t n_ = 0;
  std::shared_ptr<const std::vector<double>> values_;
};

// One "code value" line per ternary code, every code 0..3^n-1 exactly once.
PairTable parse_pair_table(std::istream& in, std::size_t n);
PairTable read_pair_table(const std::string& path, std::size_t n);
void write_pair_table(std::ostream& out, const PairTable& table);

// Sum form over the threshold chain of x; f is called at most n times.
double setpair_extension(const SetPairFunction& f, std::span<const double> x);
// Integral of f(V_t⁺, V_t⁻) over t ∈ [0, ‖x‖∞], summed exactly over the
// constant pieces between breakpoints; steps > 1 subdivides each piece.
double setpair_extension_integral(const SetPairFunction& f, std::span<const double> x,
                                  std::size_t steps = 1);
// Σ λᵢ f(Vᵢ⁺, Vᵢ⁻) for an arbitrary valid chain.
double setpair_extension_chain(const SetPairFunction& f, const ChainDecomposition& chain);

// Classical Lovász extension: sum form over ascending x with V₀ = V.
double original_extension(const SetFunction& f, std::span<const double> x);
// ∫_{min x}^{max x} f({x > t}) dt + f(V)·min x.
double original_extension_integral(const SetFunction& f, std::span<const double> x);

struct PropertyReport {
  std::size_t trials = 0;
  double homogeneity = 0.0;  // max |f^L(λx) − λ f^L(x)|
  double sign_shift = 0.0;   // max |f^L(x + α sign x) − f^L(x) − α f(V₀⁺,V₀⁻)|
  double additivity = 0.0;   // max |(f+g)^L − f^L − g^L| and |(c f)^L − c f^L|
  double evenness = 0.0;     // max |f^L(x) − f^L(−x)|
  bool symmetric = false;    // f(A,B) = f(B,A) on every pair (exhaustive)
  bool even_matches_symmetric = false;
};

// Random-sample check of homogeneity, sign shift, additivity and the
// even ⇔ symmetric equivalence. Needs f.n() <= kMaxEnumeratedPairVertices.
PropertyReport extension_properties_check(const SetPairFunction& f, std::size_t trials,
                                          std::uint64_t seed);

}  // namespace setpair
