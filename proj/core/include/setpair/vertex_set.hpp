#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace setpair {

/// Subset of a ground set {0, ..., universe-1} stored as a packed bitset.
///
/// Vertices are 0-indexed in the API; only text and file formats use
/// 1-based labels. Binary operations require both operands to share the
/// same universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members);
  VertexSet(std::size_t universe, std::span<const std::size_t> members);

  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(std::size_t v) const;
  void insert(std::size_t v);
  void erase(std::size_t v);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  std::vector<std::size_t> members() const;

  // Only valid for universe() <= 64.
  std::uint64_t mask() const;

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool is_disjoint(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
  friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
  friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// "{1,2,3}" with 1-based labels.
std::string to_text(const VertexSet& s);

}  // namespace setpair
