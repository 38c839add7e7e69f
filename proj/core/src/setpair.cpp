#include "setpair/setpair.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "setpair/error.hpp"

namespace setpair {

SetPair::SetPair(VertexSet a_, VertexSet b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.universe() != b.universe()) throw InvalidArgument("SetPair: universe mismatch");
  if (!a.is_disjoint(b)) throw InvalidArgument("SetPair: A and B overlap");
}

bool pair_contains(const SetPair& outer, const SetPair& inner) {
  return inner.a.is_subset_of(outer.a) && inner.b.is_subset_of(outer.b);
}

NestedPair nested_from_setpair(const SetPair& p) { return {p.a, p.a | p.b}; }

SetPair setpair_from_nested(const NestedPair& q) {
  if (!q.inner.is_subset_of(q.outer)) throw InvalidArgument("NestedPair: inner not inside outer");
  return SetPair(q.inner, q.outer - q.inner);
}

std::vector<double> indicator(const SetPair& p) {
  std::vector<double> x(p.n(), 0.0);
  p.a.for_each([&](std::size_t v) { x[v] = 1.0; });
  p.b.for_each([&](std::size_t v) { x[v] = -1.0; });
  return x;
}

std::optional<SetPair> decode_indicator(std::span<const double> x) {
  SetPair p(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (x[v] == 1.0) {
      p.a.insert(v);
    } else if (x[v] == -1.0) {
      p.b.insert(v);
    } else if (x[v] != 0.0) {
      return std::nullopt;
    }
  }
  return p;
}

std::uint64_t pow3(std::size_t e) {
  if (e > 40) throw GuardExceeded("3^" + std::to_string(e) + " overflows 64 bits");
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 3;
  return r;
}

std::uint64_t pair_code(const SetPair& p) {
  std::uint64_t code = 0;
  for (std::size_t v = p.n(); v-- > 0;) {
    code = code * 3 + (p.a.contains(v) ? 1 : p.b.contains(v) ? 2 : 0);
  }
  return code;
}

SetPair pair_from_code(std::uint64_t code, std::size_t n) {
  if (code >= pow3(n)) throw InvalidArgument("pair_from_code: code out of range");
  SetPair p(n);
  for (std::size_t v = 0; v < n; ++v, code /= 3) {
    if (code % 3 == 1) p.a.insert(v);
    if (code % 3 == 2) p.b.insert(v);
  }
  return p;
}

std::uint64_t witness_rank(const SetPair& p) {
  std::uint64_t rank = 0;
  for (std::size_t v = 0; v < p.n(); ++v) {
    rank = rank * 3 + (p.a.contains(v) ? 0 : p.b.contains(v) ? 1 : 2);
  }
  return rank;
}

SetPairRange::iterator::iterator(std::size_t n, std::uint64_t code)
    : code_(code), digits_(n, 0), current_(n) {
  for (std::size_t v = 0; v < n; ++v, code /= 3) {
    digits_[v] = static_cast<std::uint8_t>(code % 3);
    if (digits_[v] == 1) current_.a.insert(v);
    if (digits_[v] == 2) current_.b.insert(v);
  }
}

SetPairRange::iterator& SetPairRange::iterator::operator++() {
  ++code_;
  for (std::size_t v = 0; v < digits_.size(); ++v) {
    if (digits_[v] == 0) {
      digits_[v] = 1;
      current_.a.insert(v);
      return *this;
    }
    if (digits_[v] == 1) {
      digits_[v] = 2;
      current_.a.erase(v);
      current_.b.insert(v);
      return *this;
    }
    digits_[v] = 0;
    current_.b.erase(v);
  }
  return *this;
}

SetPairRange enumerate_setpairs(std::size_t n) {
  if (n > kMaxEnumeratedPairVertices) {
    throw GuardExceeded("set-pair enumeration limited to n <= " +
                        std::to_string(kMaxEnumeratedPairVertices) + " (got n=" +
                        std::to_string(n) + ")");
  }
  return SetPairRange(n);
}

std::vector<double> ChainDecomposition::reconstruct() const {
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    pairs[i].a.for_each([&](std::size_t v) { x[v] += gaps[i]; });
    pairs[i].b.for_each([&](std::size_t v) { x[v] -= gaps[i]; });
  }
  return x;
}

double ChainDecomposition::total_gap() const {
  return std::accumulate(gaps.begin(), gaps.end(), 0.0);
}

ChainDecomposition ChainDecomposition::compact() const {
  ChainDecomposition out;
  out.n = n;
  out.sigma = sigma;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (gaps[i] == 0.0) continue;
    if (!out.pairs.empty() && out.pairs.back() == pairs[i]) {
      out.gaps.back() += gaps[i];
    } else {
      out.pairs.push_back(pairs[i]);
      out.gaps.push_back(gaps[i]);
    }
  }
  return out;
}

void ChainDecomposition::validate() const {
  if (pairs.size() != gaps.size()) throw InvalidArgument("chain: pairs/gaps size mismatch");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].n() != n) throw InvalidArgument("chain: pair universe mismatch");
    if (!(gaps[i] >= 0.0) || !std::isfinite(gaps[i])) {
      throw InvalidArgument("chain: gap " + std::to_string(i) + " is negative or non-finite");
    }
    if (i > 0 && !pair_contains(pairs[i - 1], pairs[i])) {
      throw InvalidArgument("chain: link " + std::to_string(i) + " is not nested");
    }
  }
}

namespace {

ChainDecomposition build_chain(std::span<const double> x, std::span<const std::size_t> order) {
  const std::size_t n = x.size();
  ChainDecomposition chain;
  chain.n = n;
  chain.sigma.reserve(n + 1);
  chain.sigma.push_back(0);
  for (std::size_t v : order) chain.sigma.push_back(v + 1);

  SetPair current(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (x[v] > 0.0) current.a.insert(v);
    if (x[v] < 0.0) current.b.insert(v);
  }
  chain.pairs.reserve(n);
  chain.gaps.reserve(n);
  double level = 0.0;
  std::size_t dropped = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // Level i is |x_{σ(i)}| with the x₀ = 0 sentinel at i = 0.
    level = i == 0 ? 0.0 : std::fabs(x[order[i - 1]]);
    while (dropped < n && std::fabs(x[order[dropped]]) <= level) {
      current.a.erase(order[dropped]);
      current.b.erase(order[dropped]);
      ++dropped;
    }
    chain.pairs.push_back(current);
    chain.gaps.push_back(std::fabs(x[order[i]]) - level);
  }
  return chain;
}

void check_finite(std::span<const double> x) {
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidArgument("threshold_pairs: non-finite entry");
  }
}

}  // namespace

ChainDecomposition threshold_pairs(std::span<const double> x) {
  check_finite(x);
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::fabs(x[i]) < std::fabs(x[j]);
  });
  return build_chain(x, order);
}

ChainDecomposition threshold_pairs(std::span<const double> x,
                                   std::span<const std::size_t> order) {
  check_finite(x);
  if (order.size() != x.size()) throw InvalidArgument("threshold_pairs: order size mismatch");
  std::vector<bool> seen(x.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= x.size() || seen[order[i]]) {
      throw InvalidArgument("threshold_pairs: order is not a permutation");
    }
    seen[order[i]] = true;
    if (i > 0 && std::fabs(x[order[i - 1]]) > std::fabs(x[order[i]])) {
      throw InvalidArgument("threshold_pairs: order does not sort |x|");
    }
  }
  return build_chain(x, order);
}

std::string to_text(const SetPair& p) { return "A=" + to_text(p.a) + ";B=" + to_text(p.b); }

}  // namespace setpair
