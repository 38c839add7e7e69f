#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "setpair/vertex_set.hpp"

namespace setpair {

inline constexpr std::size_t kMaxEnumeratedPairVertices = 16;

/// Ordered pair (A, B) of disjoint vertex sets over a common ground set.
struct SetPair {
  VertexSet a;
  VertexSet b;

  SetPair() = default;
  explicit SetPair(std::size_t n) : a(n), b(n) {}
  // Throws InvalidArgument if the sets overlap or have different universes.
  SetPair(VertexSet a_, VertexSet b_);

  std::size_t n() const noexcept { return a.universe(); }
  bool empty() const noexcept { return a.empty() && b.empty(); }
  VertexSet rest() const { return (a | b).complement(); }
  SetPair swapped() const { return SetPair(b, a); }

  friend bool operator==(const SetPair&, const SetPair&) = default;
};

// Componentwise inclusion (inner.a ⊆ outer.a and inner.b ⊆ outer.b).
bool pair_contains(const SetPair& outer, const SetPair& inner);

/// (X_I, X_O) with X_I ⊆ X_O.
struct NestedPair {
  VertexSet inner;
  VertexSet outer;

  friend bool operator==(const NestedPair&, const NestedPair&) = default;
};

NestedPair nested_from_setpair(const SetPair& p);
// Throws InvalidArgument unless inner ⊆ outer.
SetPair setpair_from_nested(const NestedPair& q);

std::vector<double> indicator(const SetPair& p);
// Inverse of indicator(): nullopt if any entry is not exactly -1, 0 or +1.
std::optional<SetPair> decode_indicator(std::span<const double> x);

// Ternary code: vertex v contributes digit·3^v with digit 0 (neither),
// 1 (in A) or 2 (in B). Codes run over 0..3^n-1.
std::uint64_t pair_code(const SetPair& p);
SetPair pair_from_code(std::uint64_t code, std::size_t n);
std::uint64_t pow3(std::size_t e);

// Rank for deterministic tie-breaking: pairs compare lexicographically on
// per-vertex labels A < B < neither, starting at vertex 1. Smaller wins.
std::uint64_t witness_rank(const SetPair& p);

/// Exhaustive range over all 3^n set-pairs in ternary-counter order
/// (vertex 1 is the least significant digit).
class SetPairRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SetPair;
    using difference_type = std::ptrdiff_t;
    using pointer = const SetPair*;
    using reference = const SetPair&;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t code);
    // Past-the-end marker; only the code takes part in comparisons.
    static iterator sentinel(std::uint64_t code) {
      iterator it;
      it.code_ = code;
      return it;
    }

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    std::uint64_t code() const noexcept { return code_; }
    friend bool operator==(const iterator& x, const iterator& y) { return x.code_ == y.code_; }

   private:
    std::uint64_t code_ = 0;
    std::vector<std::uint8_t> digits_;
    SetPair current_;
  };

  explicit SetPairRange(std::size_t n) : n_(n), size_(pow3(n)) {}
  iterator begin() const { return iterator(n_, 0); }
  iterator end() const { return iterator::sentinel(size_); }
  std::uint64_t size() const noexcept { return size_; }

 private:
  std::size_t n_;
  std::uint64_t size_;
};

// Throws GuardExceeded for n > kMaxEnumeratedPairVertices.
SetPairRange enumerate_setpairs(std::size_t n);

/// Nested chain of set-pairs with nonnegative weights.
///
/// pairs[i] ⊇ pairs[i+1] componentwise; Σ gaps[i]·1_{pairs[i]} rebuilds the
/// source vector and Σ gaps = ‖x‖∞. sigma[0] = 0 is the x₀ := 0 sentinel;
/// sigma[i] for i ≥ 1 is the 1-based vertex with the i-th smallest |x|.
struct ChainDecomposition {
  std::size_t n = 0;
  std::vector<SetPair> pairs;
  std::vector<double> gaps;
  std::vector<std::size_t> sigma;

  std::vector<double> reconstruct() const;
  double total_gap() const;
  // Drops zero-gap links and merges repeated pairs.
  ChainDecomposition compact() const;
  // Throws InvalidArgument on broken nesting, negative gaps or size mismatch.
  void validate() const;
};

// Threshold chain of x sorted by (|x_i|, i). Throws InvalidArgument on
// non-finite entries.
ChainDecomposition threshold_pairs(std::span<const double> x);
// Same, with an explicit 0-based order; it must sort x by magnitude.
ChainDecomposition threshold_pairs(std::span<const double> x,
                                   std::span<const std::size_t> order);

// "A={1,2};B={3}"
std::string to_text(const SetPair& p);

}  // namespace setpair
