#include "setpair/submodular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "setpair/error.hpp"
#include "setpair/parallel.hpp"

namespace setpair {

namespace {

double tolerance(double rhs) { return 1e-12 * std::max(1.0, std::fabs(rhs)); }
bool violated(double lhs, double rhs) { return lhs < rhs - tolerance(rhs); }

// Codes of a PairTable as (A, B) bitmasks, and the reverse map.
struct CodeSpace {
  std::size_t n = 0;
  std::uint64_t size = 0;
  std::vector<std::uint32_t> amask;
  std::vector<std::uint32_t> bmask;
  std::vector<std::uint64_t> tern;  // Σ_{v ∈ mask} 3^v

  explicit CodeSpace(std::size_t n_) : n(n_), size(pow3(n_)), amask(size), bmask(size) {
    tern.assign(std::size_t{1} << n, 0);
    for (std::uint32_t m = 1; m < tern.size(); ++m) {
      const int low = __builtin_ctz(m);
      tern[m] = tern[m & (m - 1)] + pow3(static_cast<std::size_t>(low));
    }
    for (std::uint64_t c = 0; c < size; ++c) {
      std::uint64_t rest = c;
      for (std::size_t v = 0; v < n; ++v, rest /= 3) {
        if (rest % 3 == 1) amask[c] |= 1U << v;
        if (rest % 3 == 2) bmask[c] |= 1U << v;
      }
    }
  }

  std::uint64_t code(std::uint32_t a, std::uint32_t b) const { return tern[a] + 2 * tern[b]; }
  SetPair pair(std::uint32_t a, std::uint32_t b) const {
    return SetPair(VertexSet::from_mask(n, a), VertexSet::from_mask(n, b));
  }
};

void require_exhaustive(std::size_t n) {
  if (n > kMaxExhaustiveCheckVertices) {
    throw GuardExceeded("exhaustive submodularity checks limited to n <= " +
                        std::to_string(kMaxExhaustiveCheckVertices) + " (got n=" +
                        std::to_string(n) + ")");
  }
}

struct Found {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  ViolationCertificate cert;
};

// Scans unordered pairs of codes i <= j, returning the violation with the
// smallest (i, j). test(i, j) yields a certificate or nothing.
template <class Test>
std::optional<ViolationCertificate> first_violation(std::uint64_t size, Test&& test) {
  auto found = chunked_reduce(
      size, 16, std::optional<Found>{},
      [&](std::uint64_t begin, std::uint64_t end) -> std::optional<Found> {
        for (std::uint64_t i = begin; i < end; ++i) {
          for (std::uint64_t j = i; j < size; ++j) {
            if (auto cert = test(i, j)) return Found{i, j, std::move(*cert)};
          }
        }
        return std::nullopt;
      },
      [](std::optional<Found> acc, std::optional<Found> part) { return acc ? acc : part; });
  if (!found) return std::nullopt;
  return std::move(found->cert);
}

struct PairJoinMeet {
  std::uint32_t ja, jb, ma, mb;
};

PairJoinMeet join_meet(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  const std::uint32_t ac = a | c;
  const std::uint32_t bd = b | d;
  return {ac & ~bd, bd & ~ac, a & c, b & d};
}

}  // namespace

std::optional<ViolationCertificate> check_pair_submodular(const PairTable& f) {
  require_exhaustive(f.n());
  const CodeSpace cs(f.n());
  const auto& val = f.values();
  return first_violation(cs.size, [&](std::uint64_t i, std::uint64_t j)
                                      -> std::optional<ViolationCertificate> {
    const PairJoinMeet jm = join_meet(cs.amask[i], cs.bmask[i], cs.amask[j], cs.bmask[j]);
    const double lhs = val[i] + val[j];
    const double rhs = val[cs.code(jm.ja, jm.jb)] + val[cs.code(jm.ma, jm.mb)];
    if (!violated(lhs, rhs)) return std::nullopt;
    return ViolationCertificate{"pair-submodular",
                                {cs.pair(cs.amask[i], cs.bmask[i]), cs.pair(cs.amask[j], cs.bmask[j]),
                                 cs.pair(jm.ja, jm.jb), cs.pair(jm.ma, jm.mb)},
                                lhs,
                                rhs};
  });
}

std::optional<ViolationCertificate> check_pair_submodular(const SetPairFunction& f) {
  require_exhaustive(f.n());
  return check_pair_submodular(PairTable::tabulate(f));
}

std::optional<ViolationCertificate> check_pair_submodular_sampled(const SetPairFunction& f,
                                                                  std::uint64_t trials,
                                                                  std::uint64_t seed) {
  const std::size_t n = f.n();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> digit(0, 2);
  auto draw = [&] {
    SetPair p(n);
    for (std::size_t v = 0; v < n; ++v) {
      const int d = digit(rng);
      if (d == 1) p.a.insert(v);
      if (d == 2) p.b.insert(v);
    }
    return p;
  };
  for (std::uint64_t t = 0; t < trials; ++t) {
    const SetPair p = draw();
    const SetPair q = draw();
    const VertexSet ac = p.a | q.a;
    const VertexSet bd = p.b | q.b;
    const SetPair join(ac - bd, bd - ac);
    const SetPair meet(p.a & q.a, p.b & q.b);
    const double lhs = f(p) + f(q);
    const double rhs = f(join) + f(meet);
    if (violated(lhs, rhs)) return ViolationCertificate{"pair-submodular", {p, q, join, meet}, lhs, rhs};
  }
  return std::nullopt;
}

StrictReport check_strict_pair_submodular(const PairTable& f) {
  require_exhaustive(f.n());
  const CodeSpace cs(f.n());
  const auto& val = f.values();
  StrictReport report;
  for (std::uint64_t i = 0; i < cs.size; ++i) {
    for (std::uint64_t j = i; j < cs.size; ++j) {
      const std::uint32_t a = cs.amask[i], b = cs.bmask[i], c = cs.amask[j], d = cs.bmask[j];
      const PairJoinMeet jm = join_meet(a, b, c, d);
      const double lhs = val[i] + val[j];
      const double rhs = val[cs.code(jm.ja, jm.jb)] + val[cs.code(jm.ma, jm.mb)];
      auto cert = [&](const char* kind) {
        return ViolationCertificate{
            kind, {cs.pair(a, b), cs.pair(c, d), cs.pair(jm.ja, jm.jb), cs.pair(jm.ma, jm.mb)},
            lhs, rhs};
      };
      if (violated(lhs, rhs)) {
        if (!report.violation) report.violation = cert("pair-submodular");
        continue;
      }
      if (std::fabs(lhs - rhs) > tolerance(rhs)) continue;
      ++report.equality_cases;
      const bool nested = ((a & ~c) == 0 && (b & ~d) == 0) || ((c & ~a) == 0 && (d & ~b) == 0);
      if (!nested && !report.incomparable_equality) {
        report.incomparable_equality = cert("strict-equality-not-nested");
      }
    }
  }
  return report;
}

std::optional<ViolationCertificate> check_nested_submodular(const PairTable& f, NestedForm form) {
  require_exhaustive(f.n());
  const CodeSpace cs(f.n());
  const auto& val = f.values();
  // p(I, O) = f(I, O ∖ I)
  auto p = [&](std::uint32_t inner, std::uint32_t outer) {
    return val[cs.code(inner, outer & ~inner)];
  };
  const char* kind = form == NestedForm::Lattice ? "nested-lattice" : "nested-corrected";
  return first_violation(cs.size, [&](std::uint64_t i, std::uint64_t j)
                                      -> std::optional<ViolationCertificate> {
    const std::uint32_t xi = cs.amask[i], xo = cs.amask[i] | cs.bmask[i];
    const std::uint32_t yi = cs.amask[j], yo = cs.amask[j] | cs.bmask[j];
    std::uint32_t z = 0;
    if (form == NestedForm::Corrected) z = (xo & yi & ~xi) | (yo & xi & ~yi);
    const std::uint32_t lo_i = xi & yi, lo_o = (xo & yo) & ~z;
    const std::uint32_t hi_i = (xi | yi) & ~z, hi_o = (xo | yo) & ~z;
    const double lhs = val[i] + val[j];
    const double rhs = p(lo_i, lo_o) + p(hi_i, hi_o);
    if (!violated(lhs, rhs)) return std::nullopt;
    return ViolationCertificate{kind,
                                {cs.pair(xi, xo & ~xi), cs.pair(yi, yo & ~yi),
                                 cs.pair(hi_i, hi_o & ~hi_i), cs.pair(lo_i, lo_o & ~lo_i)},
                                lhs,
                                rhs};
  });
}

std::optional<ViolationCertificate> check_partial_submodular(const PairTable& f) {
  require_exhaustive(f.n());
  const CodeSpace cs(f.n());
  const auto& val = f.values();
  const std::uint32_t full = (1U << f.n()) - 1;
  // B-slot: fixed A, B and D range over subsets of A^c.
  for (std::uint32_t a = 0; a <= full; ++a) {
    const std::uint32_t free = full & ~a;
    for (std::uint32_t b = free;; b = (b - 1) & free) {
      for (std::uint32_t d = free;; d = (d - 1) & free) {
        const double lhs = val[cs.code(a, b)] + val[cs.code(a, d)];
        const double rhs = val[cs.code(a, b | d)] + val[cs.code(a, b & d)];
        if (violated(lhs, rhs)) {
          return ViolationCertificate{"partial-submodular(B-slot)",
                                      {cs.pair(a, b), cs.pair(a, d), cs.pair(a, b | d),
                                       cs.pair(a, b & d)},
                                      lhs,
                                      rhs};
        }
        if (d == 0) break;
      }
      if (b == 0) break;
    }
  }
  // A-slot: fixed B, A and C range over subsets of B^c.
  for (std::uint32_t b = 0; b <= full; ++b) {
    const std::uint32_t free = full & ~b;
    for (std::uint32_t a = free;; a = (a - 1) & free) {
      for (std::uint32_t c = free;; c = (c - 1) & free) {
        const double lhs = val[cs.code(a, b)] + val[cs.code(c, b)];
        const double rhs = val[cs.code(a | c, b)] + val[cs.code(a & c, b)];
        if (violated(lhs, rhs)) {
          return ViolationCertificate{"partial-submodular(A-slot)",
                                      {cs.pair(a, b), cs.pair(c, b), cs.pair(a | c, b),
                                       cs.pair(a & c, b)},
                                      lhs,
                                      rhs};
        }
        if (c == 0) break;
      }
      if (a == 0) break;
    }
  }
  return std::nullopt;
}

namespace {

// Sum-form extension straight off a table, without set allocations.
double table_extension(const PairTable& f, const CodeSpace& cs, std::span<const double> x,
                       std::vector<std::size_t>& order) {
  const std::size_t n = x.size();
  order.resize(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return std::fabs(x[i]) < std::fabs(x[j]); });
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (x[v] > 0) a |= 1U << v;
    if (x[v] < 0) b |= 1U << v;
  }
  double total = 0.0;
  double level = 0.0;
  std::size_t dropped = 0;
  for (std::size_t i = 0; i < n; ++i) {
    level = i == 0 ? 0.0 : std::fabs(x[order[i - 1]]);
    while (dropped < n && std::fabs(x[order[dropped]]) <= level) {
      a &= ~(1U << order[dropped]);
      b &= ~(1U << order[dropped]);
      ++dropped;
    }
    const double gap = std::fabs(x[order[i]]) - level;
    if (gap != 0.0) total += gap * f.values()[cs.code(a, b)];
  }
  return total;
}

}  // namespace

std::optional<ConvexityWitness> convexity_probe(const PairTable& f, std::uint64_t trials,
                                                std::uint64_t seed) {
  const std::size_t n = f.n();
  require_exhaustive(n);
  if (f.at(0) != 0.0) throw InvalidArgument("convexity_probe: requires f(empty, empty) = 0");
  const CodeSpace cs(n);
  std::vector<std::size_t> order;
  std::vector<double> x(n), y(n), mid(n);

  auto probe = [&]() -> std::optional<ConvexityWitness> {
    for (std::size_t v = 0; v < n; ++v) mid[v] = 0.5 * (x[v] + y[v]);
    const double m = table_extension(f, cs, mid, order);
    const double avg = 0.5 * (table_extension(f, cs, x, order) + table_extension(f, cs, y, order));
    if (m > avg + tolerance(avg)) return ConvexityWitness{x, y, m, avg};
    return std::nullopt;
  };

  std::uint64_t done = 0;
  for (std::uint64_t i = 0; i < cs.size; ++i) {
    for (std::uint64_t j = i; j < cs.size; ++j, ++done) {
      for (std::size_t v = 0; v < n; ++v) {
        x[v] = (cs.amask[i] >> v & 1U) ? 1.0 : (cs.bmask[i] >> v & 1U) ? -1.0 : 0.0;
        y[v] = (cs.amask[j] >> v & 1U) ? 1.0 : (cs.bmask[j] >> v & 1U) ? -1.0 : 0.0;
      }
      if (auto w = probe()) return w;
    }
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<int> small(-2, 2);
  for (std::uint64_t t = done; t < trials; ++t) {
    for (std::size_t v = 0; v < n; ++v) {
      switch (t % 3) {
        case 0:
          x[v] = normal(rng);
          y[v] = normal(rng);
          break;
        case 1:
          x[v] = small(rng);
          y[v] = small(rng);
          break;
        default:
          x[v] = small(rng) + 0.1 * normal(rng);
          y[v] = normal(rng);
          break;
      }
    }
    if (auto w = probe()) return w;
  }
  return std::nullopt;
}

std::optional<ViolationCertificate> original_submodular_check(const SetFunction& f) {
  const std::size_t n = f.n();
  if (n > kMaxSetFunctionCheckVertices) {
    throw GuardExceeded("set-function submodularity check limited to n <= " +
                        std::to_string(kMaxSetFunctionCheckVertices));
  }
  const std::uint32_t count = 1U << n;
  std::vector<double> val(count);
  for (std::uint32_t m = 0; m < count; ++m) val[m] = f(VertexSet::from_mask(n, m));
  auto as_pair = [n](std::uint32_t m) { return SetPair(VertexSet::from_mask(n, m), VertexSet(n)); };
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = a; b < count; ++b) {
      const double lhs = val[a] + val[b];
      const double rhs = val[a | b] + val[a & b];
      if (violated(lhs, rhs)) {
        return ViolationCertificate{"submodular",
                                    {as_pair(a), as_pair(b), as_pair(a | b), as_pair(a & b)},
                                    lhs,
                                    rhs};
      }
    }
  }
  return std::nullopt;
}

std::optional<ConvexityWitness> original_convexity_probe(const SetFunction& f,
                                                         std::uint64_t trials,
                                                         std::uint64_t seed) {
  const std::size_t n = f.n();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<double> x(n), y(n), mid(n);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (std::size_t v = 0; v < n; ++v) {
      x[v] = t % 2 == 0 ? normal(rng) : bit(rng);
      y[v] = t % 2 == 0 ? normal(rng) : bit(rng);
      mid[v] = 0.5 * (x[v] + y[v]);
    }
    const double m = original_extension(f, mid);
    const double avg = 0.5 * (original_extension(f, x) + original_extension(f, y));
    if (m > avg + tolerance(avg)) return ConvexityWitness{x, y, m, avg};
  }
  return std::nullopt;
}

Decomposition decomposition_minimum(const SetPairFunction& f, std::span<const double> x,
                                    double budget) {
  const std::size_t n = f.n();
  if (n > kMaxDecompositionVertices) {
    throw GuardExceeded("decomposition_minimum limited to n <= " +
                        std::to_string(kMaxDecompositionVertices));
  }
  if (x.size() != n) throw InvalidArgument("decomposition_minimum: dimension mismatch");

  // Columns: every nonempty pair, then a slack for Σλ <= budget.
  std::vector<SetPair> pairs;
  for (const SetPair& p : enumerate_setpairs(n)) {
    if (!p.empty()) pairs.push_back(p);
  }
  const std::size_t cols = pairs.size() + 1;
  const std::size_t rows = n + 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows),
                                            static_cast<Eigen::Index>(cols));
  std::vector<double> cost(cols, 0.0);
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const auto ind = indicator(pairs[c]);
    for (std::size_t r = 0; r < n; ++r) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = ind[r];
    m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(c)) = 1.0;
    cost[c] = f(pairs[c]);
  }
  m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(cols - 1)) = 1.0;
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(rows));
  for (std::size_t r = 0; r < n; ++r) rhs(static_cast<Eigen::Index>(r)) = x[r];
  rhs(static_cast<Eigen::Index>(n)) = budget;

  // Every basic feasible solution picks `rows` columns; the LP optimum is
  // attained at one of them.
  std::optional<Decomposition> best;
  std::vector<std::size_t> pick(rows);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  Eigen::MatrixXd basis(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(rows));
  while (true) {
    for (std::size_t k = 0; k < rows; ++k) basis.col(static_cast<Eigen::Index>(k)) = m.col(static_cast<Eigen::Index>(pick[k]));
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
    if (lu.isInvertible()) {
      const Eigen::VectorXd lam = lu.solve(rhs);
      bool feasible = (basis * lam - rhs).cwiseAbs().maxCoeff() <= 1e-9 * (1.0 + rhs.cwiseAbs().maxCoeff());
      double value = 0.0;
      for (std::size_t k = 0; k < rows && feasible; ++k) {
        if (lam(static_cast<Eigen::Index>(k)) < -1e-12) feasible = false;
        value += std::max(0.0, lam(static_cast<Eigen::Index>(k))) * cost[pick[k]];
      }
      if (feasible && (!best || value < best->value - 1e-12)) {
        Decomposition d;
        d.value = value;
        for (std::size_t k = 0; k < rows; ++k) {
          const double w = lam(static_cast<Eigen::Index>(k));
          if (pick[k] + 1 == cols || w <= 1e-15) continue;
          d.pairs.push_back(pairs[pick[k]]);
          d.weights.push_back(w);
        }
        best = std::move(d);
      }
    }
    // Next combination in lexicographic order.
    std::size_t k = rows;
    while (k > 0 && pick[k - 1] == cols - rows + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t r = k; r < rows; ++r) pick[r] = pick[r - 1] + 1;
  }
  if (!best) throw InvalidArgument("decomposition_minimum: infeasible (budget below sup norm?)");
  return *best;
}

SetPairFunction sqrt_cardinality(std::size_t n) {
  return SetPairFunction(
      "sqrt-card", n,
      [](const SetPair& p) { return std::sqrt(static_cast<double>(p.a.count() + p.b.count())); },
      true);
}

}  // namespace setpair
