#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "setpair/vertex_set.hpp"

namespace setpair {

struct Edge {
  std::size_t u;  // 0-based
  std::size_t v;  // 0-based
  double w;
};

struct Neighbor {
  std::size_t vertex;
  double w;
};

/// Weighted undirected simple graph. Immutable after construction.
///
/// Edges are stored canonically (u < v, sorted lexicographically), so two
/// graphs built from the same edge set in different orders are identical.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidArgument on self-loops, duplicates, out-of-range
  // endpoints or negative/non-finite weights.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Neighbor>& neighbors(std::size_t v) const { return adjacency_.at(v); }

  double degree(std::size_t v) const { return degree_.at(v); }
  const std::vector<double>& degrees() const noexcept { return degree_; }
  double total_volume() const noexcept { return total_volume_; }

  // |∂S|: weight of edges with exactly one endpoint in s.
  double boundary_weight(const VertexSet& s) const;
  // |E(A,B)|; throws InvalidArgument if a and b overlap.
  double cross_weight(const VertexSet& a, const VertexSet& b) const;
  double volume(const VertexSet& s) const;
  double internal_weight(const VertexSet& s) const;

  // Order-sensitive checksum over (n, canonical edges); stable across runs.
  std::uint64_t digest() const noexcept;

 private:
  void check_universe(const VertexSet& s) const;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> degree_;
  double total_volume_ = 0.0;
};

// "n m" header then m lines "u v w" (1-based); '#' starts a comment.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace setpair
