#include "setpair/kcut.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "setpair/error.hpp"
#include "setpair/numeric.hpp"
#include "setpair/parallel.hpp"

namespace setpair {

double BlockVector::sup_norm() const {
  double m = 0.0;
  for (double v : data) m = std::max(m, std::fabs(v));
  return m;
}

BlockVector parse_block_vector(std::istream& in, std::size_t n) {
  std::vector<std::vector<double>> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream fields(raw.substr(0, raw.find('#')));
    std::vector<double> row;
    for (std::string tok; fields >> tok;) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || !std::isfinite(v)) {
        throw ParseError(ParseErrorKind::BadValue, line_no, "'" + tok + "' is not a finite number");
      }
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (row.size() != n) {
      throw ParseError(ParseErrorKind::CountMismatch, line_no,
                       "expected " + std::to_string(n) + " values, found " +
                           std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(ParseErrorKind::MissingEntry, line_no, "no blocks");
  BlockVector x(n, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy(rows[i].begin(), rows[i].end(), x.data.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  return x;
}

BlockVector read_block_vector(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open block vector file '" + path + "'");
  return parse_block_vector(in, n);
}

void KPartition::validate(std::size_t n_vertices) const {
  VertexSet seen(n_vertices);
  for (const VertexSet& part : parts) {
    if (part.universe() != n_vertices) throw InvalidArgument("KPartition: universe mismatch");
    if (!part.is_disjoint(seen)) throw InvalidArgument("KPartition: parts overlap");
    seen |= part;
  }
  if (seen.count() != n_vertices) throw InvalidArgument("KPartition: parts do not cover V");
}

std::size_t default_levels(std::size_t k) {
  std::size_t l = 0;
  std::uint64_t p = 1;
  while (p <= k) {
    p *= 3;
    ++l;
  }
  return l;
}

namespace {

void check_k(std::size_t k, std::size_t l) {
  if (l == 0 || l > 20) throw InvalidArgument("k-cut: block count must lie in 1..20");
  if (k < 2 || k >= pow3(l)) {
    throw InvalidArgument("k-cut: need 2 <= k < 3^l (k=" + std::to_string(k) +
                          ", l=" + std::to_string(l) + ")");
  }
}

void check_graph(const Graph& g, const BlockVector& x) {
  if (x.n != g.n() || x.data.size() != x.n * x.l) {
    throw InvalidArgument("k-cut: block vector does not match the graph");
  }
}

std::uint64_t code_at(const BlockVector& x, std::size_t vertex, double t) {
  std::uint64_t code = 0;
  for (std::size_t i = x.l; i-- > 0;) {
    const double v = x.at(i, vertex);
    code = code * 3 + (v > t ? 1 : -v > t ? 2 : 0);
  }
  return code;
}

}  // namespace

std::vector<std::uint64_t> vertex_codes(const BlockVector& x, double t) {
  if (t < 0.0) throw InvalidArgument("vertex_codes: threshold must be >= 0");
  std::vector<std::uint64_t> codes(x.n);
  for (std::size_t j = 0; j < x.n; ++j) codes[j] = code_at(x, j, t);
  return codes;
}

std::map<std::uint64_t, VertexSet> parts_at_threshold(const BlockVector& x, double t) {
  std::map<std::uint64_t, VertexSet> parts;
  const auto codes = vertex_codes(x, t);
  for (std::size_t j = 0; j < x.n; ++j) {
    auto [it, inserted] = parts.try_emplace(codes[j], x.n);
    it->second.insert(j);
  }
  return parts;
}

EncodedFunctions encoded_functions(const Graph& g, std::size_t k, std::size_t l) {
  check_k(k, l);
  const std::size_t n = g.n();
  const std::uint64_t top = pow3(l) - k;
  // Vertex codes of the pair (T₁, T₂) on [ln]: digit i of vertex j is 1 if
  // i·n + j ∈ T₁, 2 if it is in T₂.
  auto codes_of = [n, l](const SetPair& p) {
    std::vector<std::uint64_t> codes(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = l; i-- > 0;) {
        const std::size_t idx = i * n + j;
        codes[j] = codes[j] * 3 + (p.a.contains(idx) ? 1 : p.b.contains(idx) ? 2 : 0);
      }
    }
    return codes;
  };
  SetPairFunction F(
      "kcut-F", n * l,
      [g, codes_of, top](const SetPair& p) {
        const auto codes = codes_of(p);
        // Σ_top |∂A_c|: an edge counts once for each endpoint in a top part,
        // unless both endpoints share a part.
        double total = 0.0;
        for (const Edge& e : g.edges()) {
          if (codes[e.u] == codes[e.v]) continue;
          if (codes[e.u] >= top) total += e.w;
          if (codes[e.v] >= top) total += e.w;
        }
        return total;
      });
  SetPairFunction G("kcut-G", n * l, [g, codes_of, top](const SetPair& p) {
    const auto codes = codes_of(p);
    double total = 0.0;
    for (std::size_t j = 0; j < codes.size(); ++j) {
      if (codes[j] >= top) total += g.degree(j);
    }
    return total;
  });
  return {std::move(F), std::move(G)};
}

double kcut_FL_integral(const Graph& g, std::size_t k, const BlockVector& x) {
  check_graph(g, x);
  return setpair_extension_integral(encoded_functions(g, k, x.l).F, x.data);
}

double kcut_GL_integral(const Graph& g, std::size_t k, const BlockVector& x) {
  check_graph(g, x);
  return setpair_extension_integral(encoded_functions(g, k, x.l).G, x.data);
}

std::vector<double> vertex_exit_times(const BlockVector& x, std::size_t k) {
  check_k(k, x.l);
  const std::uint64_t top = pow3(x.l) - k;
  std::vector<double> z(x.n, 0.0);
  std::vector<double> levels;
  for (std::size_t j = 0; j < x.n; ++j) {
    // The code only loses digits as t grows, so it is non-increasing; scan
    // the candidate thresholds {0} ∪ {|x⁽ⁱ⁾_j|} in ascending order.
    levels.assign(1, 0.0);
    for (std::size_t i = 0; i < x.l; ++i) levels.push_back(std::fabs(x.at(i, j)));
    std::sort(levels.begin(), levels.end());
    for (double t : levels) {
      if (code_at(x, j, t) < top) {
        z[j] = t;
        break;
      }
    }
  }
  return z;
}

double kcut_GL(const Graph& g, std::size_t k, const BlockVector& x) {
  check_graph(g, x);
  const auto z = vertex_exit_times(x, k);
  double total = 0.0;
  for (std::size_t j = 0; j < x.n; ++j) total += g.degree(j) * z[j];
  return total;
}

double kcut_FL(const Graph& g, std::size_t k, const BlockVector& x) {
  const double first = kcut_GL(g, k, x);
  const std::uint64_t size = pow3(x.l);
  double shared = 0.0;
  for (const Edge& e : g.edges()) {
    double sum = 0.0;
    for (std::uint64_t c = size - k; c < size; ++c) {
      // Both endpoints carry code c exactly for t ∈ [lower, upper): below
      // every signed entry of a nonzero digit, at or above every |entry| of
      // a zero digit.
      double upper = std::numeric_limits<double>::infinity();
      double lower = 0.0;
      std::uint64_t rest = c;
      for (std::size_t i = 0; i < x.l; ++i, rest /= 3) {
        const std::uint64_t digit = rest % 3;
        for (std::size_t v : {e.u, e.v}) {
          const double entry = x.at(i, v);
          if (digit == 0) {
            lower = std::max(lower, std::fabs(entry));
          } else {
            upper = std::min(upper, digit == 1 ? entry : -entry);
          }
        }
      }
      sum += std::max(upper - lower, 0.0);
    }
    shared += e.w * sum;
  }
  return first - 2.0 * shared;
}

double kcut_ratio(const Graph& g, std::size_t k, const BlockVector& x) {
  const double den = kcut_GL(g, k, x);
  if (!(den > 0.0)) {
    const auto z = vertex_exit_times(x, k);
    if (std::all_of(z.begin(), z.end(), [](double v) { return v == 0.0; })) {
      throw InfeasiblePoint(Infeasibility::ExcludedSet, "k-cut: every exit time is zero");
    }
    throw InfeasiblePoint(Infeasibility::ZeroDenominator, "k-cut");
  }
  return kcut_FL(g, k, x) / den;
}

BlockVector encode_partition(const KPartition& p, std::size_t k, std::size_t l) {
  if (l == 0) l = default_levels(k);
  check_k(k, l);
  if (p.parts.size() > k) {
    throw InvalidArgument("encode_partition: " + std::to_string(p.parts.size()) +
                          " parts exceed k=" + std::to_string(k));
  }
  const std::size_t n = p.n();
  p.validate(n);
  BlockVector x(n, l);
  const std::uint64_t first = pow3(l) - k;
  for (std::size_t m = 0; m < p.parts.size(); ++m) {
    std::uint64_t code = first + m;
    for (std::size_t i = 0; i < l; ++i, code /= 3) {
      const double value = code % 3 == 1 ? 1.0 : code % 3 == 2 ? -1.0 : 0.0;
      p.parts[m].for_each([&](std::size_t j) { x.at(i, j) = value; });
    }
  }
  return x;
}

double partition_ratio(const Graph& g, const KPartition& p) {
  p.validate(g.n());
  double num = 0.0;
  double den = 0.0;
  for (const VertexSet& part : p.parts) {
    num += g.boundary_weight(part);
    den += g.volume(part);
  }
  if (!(den > 0.0)) throw InfeasiblePoint(Infeasibility::ZeroDenominator, "k-partition ratio");
  return num / den;
}

KCutResult kcut_discrete(const Graph& g, std::size_t k, Sense sense, PartRule rule) {
  const std::size_t n = g.n();
  if (k < 2 || k > 64) throw InvalidArgument("kcut: k must lie in 2..64");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > kMaxKCutAssignments / k) {
      throw GuardExceeded("kcut: k^n exceeds " + std::to_string(kMaxKCutAssignments) +
                          " (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
    }
    total *= k;
  }
  if (g.total_volume() == 0.0) throw InvalidArgument("kcut: graph has zero volume");

  auto improves = [&](double a, double b) {
    if (approx_equal(a, b)) return false;
    return sense == Sense::Max ? a > b : a < b;
  };
  struct Partial {
    bool found = false;
    double value = 0.0;
    std::vector<std::uint8_t> label;  // part index per vertex
    std::uint64_t evaluations = 0;
  };
  auto consider = [&](Partial& acc, double value, const std::vector<std::uint8_t>& label) {
    if (!acc.found || improves(value, acc.value) ||
        (!improves(acc.value, value) && label < acc.label)) {
      acc.found = true;
      acc.value = value;
      acc.label = label;
    }
  };

  Partial best = chunked_reduce(
      total, 4096, Partial{},
      [&](std::uint64_t begin, std::uint64_t end) {
        Partial part;
        // Vertex 1 is the most significant digit so that counting order is
        // lexicographic order on labellings.
        std::vector<std::uint8_t> label(n, 0);
        std::uint64_t c = begin;
        for (std::size_t v = n; v-- > 0; c /= k) label[v] = static_cast<std::uint8_t>(c % k);
        std::vector<double> boundary(k);
        std::vector<double> volume(k);
        std::vector<std::size_t> size(k);
        for (std::uint64_t code = begin; code < end; ++code) {
          std::fill(boundary.begin(), boundary.end(), 0.0);
          std::fill(volume.begin(), volume.end(), 0.0);
          std::fill(size.begin(), size.end(), 0);
          for (std::size_t v = 0; v < n; ++v) {
            volume[label[v]] += g.degree(v);
            ++size[label[v]];
          }
          const bool feasible =
              rule == PartRule::AllowEmpty ||
              std::all_of(size.begin(), size.end(), [](std::size_t s) { return s > 0; });
          if (feasible) {
            for (const Edge& e : g.edges()) {
              if (label[e.u] != label[e.v]) {
                boundary[label[e.u]] += e.w;
                boundary[label[e.v]] += e.w;
              }
            }
            double num = 0.0;
            double den = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
              num += boundary[i];
              den += volume[i];
            }
            ++part.evaluations;
            consider(part, num / den, label);
          }
          for (std::size_t v = n; v-- > 0;) {
            if (++label[v] < k) break;
            label[v] = 0;
          }
        }
        return part;
      },
      [&](Partial acc, Partial part) {
        acc.evaluations += part.evaluations;
        if (part.found) consider(acc, part.value, part.label);
        return acc;
      });

  if (!best.found) {
    throw InvalidArgument("kcut: no labelling with " + std::to_string(k) +
                          " nonempty parts on n=" + std::to_string(n));
  }
  KCutResult result;
  result.value = best.value;
  result.evaluations = best.evaluations;
  result.witness.parts.assign(k, VertexSet(n));
  for (std::size_t v = 0; v < n; ++v) result.witness.parts[best.label[v]].insert(v);
  return result;
}

}  // namespace setpair
