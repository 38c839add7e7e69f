#include "setpair/vertex_set.hpp"

#include <bit>

#include "setpair/error.hpp"

namespace setpair {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : VertexSet(universe) {
  for (std::size_t v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const std::size_t> members)
    : VertexSet(universe) {
  for (std::size_t v : members) insert(v);
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw InvalidArgument("VertexSet::from_mask: universe exceeds 64");
  if (universe < 64 && (mask >> universe) != 0) {
    throw InvalidArgument("VertexSet::from_mask: mask has bits outside the universe");
  }
  VertexSet s(universe);
  if (universe > 0) s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (const std::size_t tail = universe % 64; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

bool VertexSet::contains(std::size_t v) const {
  if (v >= universe_) return false;
  return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(std::size_t v) {
  if (v >= universe_) {
    throw InvalidArgument("VertexSet::insert: vertex " + std::to_string(v + 1) +
                          " outside universe of size " + std::to_string(universe_));
  }
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(std::size_t v) {
  if (v >= universe_) return;
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::size_t VertexSet::count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64) throw InvalidArgument("VertexSet::mask: universe exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

VertexSet VertexSet::complement() const {
  VertexSet out = full(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool VertexSet::is_disjoint(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw InvalidArgument("VertexSet: universe mismatch (" + std::to_string(universe_) +
                          " vs " + std::to_string(other.universe_) + ")");
  }
}

std::string to_text(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t v) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace setpair
