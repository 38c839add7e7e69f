#include "setpair/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "setpair/error.hpp"

namespace setpair {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw InvalidArgument("Graph: edge endpoint outside 1.." + std::to_string(n_));
    }
    if (e.u == e.v) throw InvalidArgument("Graph: self-loop at vertex " + std::to_string(e.u + 1));
    if (!std::isfinite(e.w) || e.w < 0.0) {
      throw InvalidArgument("Graph: negative or non-finite weight");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw InvalidArgument("Graph: duplicate edge " + std::to_string(edges_[i].u + 1) + "-" +
                            std::to_string(edges_[i].v + 1));
    }
  }

  adjacency_.assign(n_, {});
  degree_.assign(n_, 0.0);
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.w});
    adjacency_[e.v].push_back({e.u, e.w});
  }
  // Degrees summed in adjacency order; the volume sums degrees in vertex
  // order so volume(V) and total_volume() agree bit for bit.
  for (std::size_t v = 0; v < n_; ++v) {
    double d = 0.0;
    for (const Neighbor& nb : adjacency_[v]) d += nb.w;
    degree_[v] = d;
  }
  for (double d : degree_) total_volume_ += d;
}

void Graph::check_universe(const VertexSet& s) const {
  if (s.universe() != n_) {
    throw InvalidArgument("Graph: vertex set universe " + std::to_string(s.universe()) +
                          " does not match n=" + std::to_string(n_));
  }
}

double Graph::boundary_weight(const VertexSet& s) const {
  check_universe(s);
  double total = 0.0;
  for (const Edge& e : edges_) {
    if (s.contains(e.u) != s.contains(e.v)) total += e.w;
  }
  return total;
}

double Graph::cross_weight(const VertexSet& a, const VertexSet& b) const {
  check_universe(a);
  check_universe(b);
  if (!a.is_disjoint(b)) throw InvalidArgument("cross_weight: sets overlap");
  double total = 0.0;
  for (const Edge& e : edges_) {
    if ((a.contains(e.u) && b.contains(e.v)) || (b.contains(e.u) && a.contains(e.v))) {
      total += e.w;
    }
  }
  return total;
}

double Graph::volume(const VertexSet& s) const {
  check_universe(s);
  double total = 0.0;
  for (std::size_t v = 0; v < n_; ++v) {
    if (s.contains(v)) total += degree_[v];
  }
  return total;
}

double Graph::internal_weight(const VertexSet& s) const {
  check_universe(s);
  double total = 0.0;
  for (const Edge& e : edges_) {
    if (s.contains(e.u) && s.contains(e.v)) total += e.w;
  }
  return total;
}

std::uint64_t Graph::digest() const noexcept {
  // FNV-1a over the canonical byte representation.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h ^= (word >> (8 * i)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  };
  mix(n_);
  for (const Edge& e : edges_) {
    mix(e.u);
    mix(e.v);
    mix(std::bit_cast<std::uint64_t>(e.w));
  }
  return h;
}

namespace {

// Strips a '#' comment and surrounding whitespace.
std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_count(const std::string& tok, std::size_t& out) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    out = std::stoull(tok);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<std::pair<std::size_t, std::size_t>> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);

    if (!have_header) {
      if (tok.size() != 2 || !parse_count(tok[0], n) || !parse_count(tok[1], m)) {
        throw ParseError(ParseErrorKind::Malformed, line_no, "expected header \"n m\"");
      }
      have_header = true;
      edges.reserve(m);
      continue;
    }

    if (edges.size() == m) {
      throw ParseError(ParseErrorKind::CountMismatch, line_no,
                       "more edge lines than the declared " + std::to_string(m));
    }
    std::size_t u = 0;
    std::size_t v = 0;
    if (tok.size() != 3 || !parse_count(tok[0], u) || !parse_count(tok[1], v)) {
      throw ParseError(ParseErrorKind::Malformed, line_no, "expected \"u v w\"");
    }
    double w = 0.0;
    std::size_t used = 0;
    try {
      w = std::stod(tok[2], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok[2].size()) {
      throw ParseError(ParseErrorKind::Malformed, line_no, "weight is not a number");
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(ParseErrorKind::OutOfRange, line_no,
                       "endpoints must lie in 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(ParseErrorKind::SelfLoop, line_no, "vertex " + tok[0]);
    if (!std::isfinite(w) || w < 0.0) throw ParseError(ParseErrorKind::BadWeight, line_no, tok[2]);

    const std::pair<std::size_t, std::size_t> key{std::min(u, v) - 1, std::max(u, v) - 1};
    const auto pos = std::lower_bound(seen.begin(), seen.end(), key);
    if (pos != seen.end() && *pos == key) {
      throw ParseError(ParseErrorKind::DuplicateEdge, line_no, tok[0] + "-" + tok[1]);
    }
    seen.insert(pos, key);
    edges.push_back({u - 1, v - 1, w});
  }

  if (!have_header) throw ParseError(ParseErrorKind::Malformed, line_no, "missing header");
  if (edges.size() != m) {
    throw ParseError(ParseErrorKind::CountMismatch, line_no,
                     "declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open graph file '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
  out.precision(old_precision);
}

}  // namespace setpair
