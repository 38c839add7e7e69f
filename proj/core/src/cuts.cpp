#include "setpair/cuts.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "setpair/error.hpp"
#include "setpair/functionals.hpp"
#include "setpair/numeric.hpp"
#include "setpair/parallel.hpp"

namespace setpair {

std::string_view to_string(CutKind kind) noexcept {
  switch (kind) {
    case CutKind::DualCheeger: return "dual-cheeger";
    case CutKind::Max3Cut: return "max3cut";
    case CutKind::RatioMax3CutI: return "ratio-max3cut-1";
    case CutKind::RatioMax3CutII: return "ratio-max3cut-2";
    case CutKind::MaxCut: return "maxcut";
    case CutKind::Cheeger: return "cheeger";
    case CutKind::AntiCheeger: return "anti-cheeger";
  }
  return "?";
}

std::optional<CutKind> parse_cut_kind(std::string_view name) {
  for (CutKind kind : kAllCutKinds) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

Sense sense_of(CutKind kind) noexcept { return kind == CutKind::Cheeger ? Sense::Min : Sense::Max; }

bool is_two_cut(CutKind kind) noexcept {
  return kind == CutKind::MaxCut || kind == CutKind::Cheeger || kind == CutKind::AntiCheeger;
}

namespace {

// Vertex labels: 0 = C (neither), 1 = A, 2 = B. Two-cut kinds use 1 = S,
// 2 = S^c. Every discrete value funnels through here so an optimum and a
// re-evaluation of its witness agree bit for bit.
std::optional<double> value_from_labels(const Graph& g, CutKind kind,
                                        const std::vector<std::uint8_t>& label) {
  double vol_a = 0.0;
  double vol_b = 0.0;
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (label[v] == 1) vol_a += g.degree(v);
    if (label[v] == 2) vol_b += g.degree(v);
  }
  double cross_ab = 0.0;  // |E(A,B)|
  double cut3 = 0.0;      // weight of edges whose endpoints carry different labels
  for (const Edge& e : g.edges()) {
    const std::uint8_t lu = label[e.u];
    const std::uint8_t lv = label[e.v];
    if (lu != lv) {
      cut3 += e.w;
      if (lu != 0 && lv != 0) cross_ab += e.w;
    }
  }
  const double vol = g.total_volume();
  const double vol_c = vol - vol_a - vol_b;

  auto ratio = [](double num, double den) -> std::optional<double> {
    if (!(den > 0.0)) return std::nullopt;
    return num / den;
  };
  switch (kind) {
    case CutKind::DualCheeger: return ratio(2.0 * cross_ab, vol_a + vol_b);
    case CutKind::Max3Cut: return ratio(2.0 * cut3, vol);
    case CutKind::RatioMax3CutI: return ratio(2.0 * cut3, vol_a + vol_b);
    case CutKind::RatioMax3CutII: return ratio(2.0 * cut3, std::max(vol_a + vol_b, vol_c));
    // Two-cut kinds: cut3 = |∂S| since every vertex is labelled 1 or 2.
    case CutKind::MaxCut: return ratio(2.0 * cut3, vol);
    case CutKind::Cheeger: return ratio(cut3, std::min(vol_a, vol_b));
    case CutKind::AntiCheeger: return ratio(cut3, std::max(vol_a, vol_b));
  }
  return std::nullopt;
}

std::vector<std::uint8_t> labels_of(const SetPair& p) {
  std::vector<std::uint8_t> label(p.n(), 0);
  p.a.for_each([&](std::size_t v) { label[v] = 1; });
  p.b.for_each([&](std::size_t v) { label[v] = 2; });
  return label;
}

SetPair pair_of(const std::vector<std::uint8_t>& label) {
  SetPair p(label.size());
  for (std::size_t v = 0; v < label.size(); ++v) {
    if (label[v] == 1) p.a.insert(v);
    if (label[v] == 2) p.b.insert(v);
  }
  return p;
}

// witness_rank computed straight from labels (A < B < neither).
std::uint64_t rank_of(const std::vector<std::uint8_t>& label) {
  std::uint64_t rank = 0;
  for (std::uint8_t l : label) rank = rank * 3 + (l == 1 ? 0 : l == 2 ? 1 : 2);
  return rank;
}

}  // namespace

std::optional<double> discrete_value(const Graph& g, CutKind kind, const SetPair& witness) {
  if (witness.n() != g.n()) throw InvalidArgument("discrete_value: witness size mismatch");
  if (is_two_cut(kind)) {
    if ((witness.a | witness.b).count() != g.n()) {
      throw InvalidArgument(std::string(to_string(kind)) + ": witness must be (S, S^c)");
    }
    if (kind == CutKind::Cheeger && (witness.a.empty() || witness.b.empty())) return std::nullopt;
  } else if (kind == CutKind::DualCheeger || kind == CutKind::RatioMax3CutI) {
    if (witness.empty()) return std::nullopt;
  }
  return value_from_labels(g, kind, labels_of(witness));
}

CutResult discrete_optimum(const Graph& g, CutKind kind) {
  const std::size_t n = g.n();
  if (g.total_volume() == 0.0) {
    throw InvalidArgument(std::string(to_string(kind)) + ": graph has zero volume");
  }
  const bool two = is_two_cut(kind);
  const std::size_t limit = two ? kMaxTwoCutVertices : kMaxEnumeratedPairVertices;
  if (n > limit) {
    throw GuardExceeded(std::string(to_string(kind)) + ": exhaustive search limited to n <= " +
                        std::to_string(limit) + " (got n=" + std::to_string(n) + ")");
  }
  const Sense sense = sense_of(kind);
  auto improves = [&](double a, double b) {
    if (approx_equal(a, b)) return false;
    return sense == Sense::Max ? a > b : a < b;
  };

  struct Partial {
    bool found = false;
    double value = 0.0;
    std::uint64_t rank = 0;
    std::vector<std::uint8_t> label;
    std::uint64_t evaluations = 0;
  };
  auto consider = [&](Partial& acc, double value, std::uint64_t rank,
                      const std::vector<std::uint8_t>& label) {
    if (!acc.found || improves(value, acc.value) || (!improves(acc.value, value) && rank < acc.rank)) {
      acc.found = true;
      acc.value = value;
      acc.rank = rank;
      acc.label = label;
    }
  };

  // Two-cut kinds count over masks of S (digit 1 ↦ S, 0 ↦ S^c); the rest
  // count ternary codes with the digit layout of pair_code().
  const std::uint64_t total = two ? (std::uint64_t{1} << n) : pow3(n);
  const std::uint64_t base = two ? 2 : 3;

  Partial best = chunked_reduce(
      total, 2048, Partial{},
      [&](std::uint64_t begin, std::uint64_t end) {
        Partial part;
        std::vector<std::uint8_t> digit(n, 0);
        std::uint64_t c = begin;
        for (std::size_t v = 0; v < n; ++v, c /= base) digit[v] = static_cast<std::uint8_t>(c % base);
        std::vector<std::uint8_t> label(n, 0);
        for (std::uint64_t code = begin; code < end; ++code) {
          for (std::size_t v = 0; v < n; ++v) label[v] = two ? (digit[v] == 1 ? 1 : 2) : digit[v];
          bool feasible = true;
          if (kind == CutKind::Cheeger) {
            feasible = code != 0 && code != total - 1;
          } else if (kind == CutKind::DualCheeger || kind == CutKind::RatioMax3CutI) {
            feasible = code != 0;
          }
          if (feasible) {
            ++part.evaluations;
            if (const auto value = value_from_labels(g, kind, label)) {
              consider(part, *value, rank_of(label), label);
            }
          }
          for (std::size_t v = 0; v < n; ++v) {
            if (++digit[v] < base) break;
            digit[v] = 0;
          }
        }
        return part;
      },
      [&](Partial acc, Partial part) {
        acc.evaluations += part.evaluations;
        if (part.found) consider(acc, part.value, part.rank, part.label);
        return acc;
      });

  if (!best.found) throw InvalidArgument(std::string(to_string(kind)) + ": no feasible cut");
  CutResult result;
  result.kind = kind;
  result.value = best.value;
  result.witness = pair_of(best.label);
  result.evaluations = best.evaluations;
  return result;
}

double continuous_objective(const Graph& g, CutKind kind, std::span<const double> x) {
  if (x.size() != g.n()) throw InvalidArgument(std::string(to_string(kind)) + ": dimension mismatch");
  const std::string name(to_string(kind));
  bool zero = true;
  bool constant = true;
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidArgument(name + ": non-finite entry");
    zero = zero && v == 0.0;
    constant = constant && v == x[0];
  }
  if (kind == CutKind::Cheeger && constant) {
    throw InfeasiblePoint(Infeasibility::ConstantVector, name + " requires nonconstant x");
  }
  if (zero) throw InfeasiblePoint(Infeasibility::ZeroVector, name + " requires x != 0");

  auto ratio = [&](double num, double den) {
    if (!(den > 0.0)) throw InfeasiblePoint(Infeasibility::ZeroDenominator, name);
    return num / den;
  };
  const double vol = g.total_volume();
  switch (kind) {
    case CutKind::DualCheeger: {
      const double norm = dnorm1(g, x);
      return 1.0 - ratio(iplus(g, x), norm);
    }
    case CutKind::Max3Cut:
      return ratio(tv(g, x) + ihat(g, x), vol * sup_norm(x));
    case CutKind::RatioMax3CutI:
      return ratio(dnorm1(g, x) - iplus(g, x) + 2.0 * ihat(g, x), dnorm1(g, x));
    case CutKind::RatioMax3CutII: {
      std::vector<double> mag(x.size());
      std::transform(x.begin(), x.end(), mag.begin(), [](double v) { return std::fabs(v); });
      return ratio(2.0 * tv(g, x) - dnorm1(g, x) + iplus(g, x),
                   vol * sup_norm(x) - median_dev(g, mag).value);
    }
    case CutKind::MaxCut:
      return ratio(tv(g, x), vol * sup_norm(x));
    case CutKind::Cheeger:
      return ratio(tv(g, x), median_dev(g, x).value);
    case CutKind::AntiCheeger:
      return ratio(tv(g, x), 2.0 * vol * sup_norm(x) - median_dev(g, x).value);
  }
  throw InvalidArgument("unknown cut kind");
}

RatioProblem pair_ratio_problem(const Graph& g, CutKind kind) {
  const SetPairFunction f1 = table_function(g, TableRow::F1);
  const SetPairFunction f2 = table_function(g, TableRow::F2);
  const SetPairFunction g1 = table_function(g, TableRow::G1);
  const SetPairFunction g2 = table_function(g, TableRow::G2);
  const SetPairFunction g3 = table_function(g, TableRow::G3);
  const std::string name(to_string(kind));
  const double vol = g.total_volume();

  // 2(F1 − F2) = 2(|E(A,B)| + |E(A∪B, C)|), written as a sum of
  // nonnegative terms so it never dips below zero in floating point.
  const SetPairFunction three_cut(
      "2(F1-F2)", g.n(),
      [g](const SetPair& p) {
        return 2.0 * (g.cross_weight(p.a, p.b) + g.cross_weight(p.a | p.b, p.rest()));
      },
      true);
  auto three_cut_ext = [g](std::span<const double> x) {
    return 2.0 * tv(g, x) - dnorm1(g, x) + iplus(g, x);
  };

  RatioProblem p;
  switch (kind) {
    case CutKind::DualCheeger:
      p = make_ratio_problem(name, 2.0 * f2, g2, Sense::Max);
      p.numerator_ext = [g](std::span<const double> x) { return dnorm1(g, x) - iplus(g, x); };
      p.denominator_ext = [g](std::span<const double> x) { return dnorm1(g, x); };
      break;
    case CutKind::Max3Cut:
      p = make_ratio_problem(name, three_cut, g1, Sense::Max);
      p.numerator_ext = three_cut_ext;
      p.denominator_ext = [vol](std::span<const double> x) { return vol * sup_norm(x); };
      break;
    case CutKind::RatioMax3CutI:
      p = make_ratio_problem(name, three_cut, g2, Sense::Max);
      p.numerator_ext = three_cut_ext;
      p.denominator_ext = [g](std::span<const double> x) { return dnorm1(g, x); };
      break;
    case CutKind::RatioMax3CutII: {
      const SetPairFunction den(
          "max(vol(A+B),vol(C))", g.n(),
          [g](const SetPair& p) {
            const double inside = g.volume(p.a | p.b);
            return std::max(inside, g.total_volume() - inside);
          },
          true);
      p = make_ratio_problem(name, three_cut, den, Sense::Max);
      p.numerator_ext = three_cut_ext;
      p.denominator_ext = [g, vol](std::span<const double> x) {
        std::vector<double> mag(x.size());
        std::transform(x.begin(), x.end(), mag.begin(), [](double v) { return std::fabs(v); });
        return vol * sup_norm(x) - median_dev(g, mag).value;
      };
      break;
    }
    case CutKind::MaxCut:
      p = make_ratio_problem(name, f1, g1, Sense::Max);
      p.numerator_ext = [g](std::span<const double> x) { return tv(g, x); };
      p.denominator_ext = [vol](std::span<const double> x) { return vol * sup_norm(x); };
      break;
    case CutKind::Cheeger:
      p = make_ratio_problem(name, f1, g3, Sense::Min, Feasibility::NonConstant);
      p.numerator_ext = [g](std::span<const double> x) { return tv(g, x); };
      p.denominator_ext = [g](std::span<const double> x) { return median_dev(g, x).value; };
      p.centring_weights = g.degrees();
      break;
    case CutKind::AntiCheeger: {
      const SetPairFunction den(
          "2G1-G3", g.n(),
          [g](const SetPair& p) {
            const double vol = g.total_volume();
            const double va = g.volume(p.a);
            const double vb = g.volume(p.b);
            return std::max(va, vol - va) + std::max(vb, vol - vb);
          },
          true);
      p = make_ratio_problem(name, f1, den, Sense::Max);
      p.numerator_ext = [g](std::span<const double> x) { return tv(g, x); };
      p.denominator_ext = [g, vol](std::span<const double> x) {
        return 2.0 * vol * sup_norm(x) - median_dev(g, x).value;
      };
      break;
    }
  }
  return p;
}

SetPair witness_from_pair(const Graph& g, CutKind kind, const SetPair& pair) {
  if (pair.n() != g.n()) throw InvalidArgument("witness_from_pair: size mismatch");
  if (!is_two_cut(kind)) return pair;
  const Sense sense = sense_of(kind);
  std::optional<double> best_value;
  SetPair best;
  std::uint64_t best_rank = 0;
  for (const VertexSet* side : {&pair.a, &pair.b}) {
    const SetPair candidate(*side, side->complement());
    const auto value = discrete_value(g, kind, candidate);
    if (!value) continue;
    const std::uint64_t rank = witness_rank(candidate);
    const bool wins = !best_value ||
                      (!approx_equal(*value, *best_value) &&
                       (sense == Sense::Max ? *value > *best_value : *value < *best_value)) ||
                      (approx_equal(*value, *best_value) && rank < best_rank);
    if (wins) {
      best_value = value;
      best = candidate;
      best_rank = rank;
    }
  }
  if (!best_value) {
    throw InfeasiblePoint(Infeasibility::ExcludedSet,
                          std::string(to_string(kind)) + ": no feasible side in " + to_text(pair));
  }
  return best;
}

}  // namespace setpair
