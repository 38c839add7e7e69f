#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "setpair/error.hpp"
#include "setpair/graph.hpp"

namespace setpair {
namespace {

ParseErrorKind parse_kind(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseErrorKind::Malformed;
}

std::size_t parse_line(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(ParseEdgeList, TriangleDegreesAndVolume) {
  const Graph g = parse_edge_list(std::string("3 3\n1 2 1\n2 3 1\n1 3 1"));
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 3u);
  EXPECT_EQ(g.degrees(), (std::vector<double>{2, 2, 2}));
  EXPECT_DOUBLE_EQ(g.total_volume(), 6.0);
}

TEST(ParseEdgeList, EmptyEdgeSet) {
  const Graph g = parse_edge_list(std::string("2 0"));
  EXPECT_EQ(g.degrees(), (std::vector<double>{0, 0}));
  EXPECT_DOUBLE_EQ(g.total_volume(), 0.0);
}

TEST(ParseEdgeList, CommentsAndBlankLines) {
  const Graph g = parse_edge_list(std::string("# header\n\n3 2 # n m\n1 2 0.5\n# mid\n2 3 2\n"));
  EXPECT_EQ(g.m(), 2u);
  EXPECT_DOUBLE_EQ(g.degree(1), 2.5);
}

TEST(ParseEdgeList, DistinctErrorsNameTheLine) {
  EXPECT_EQ(parse_kind("2 2\n1 2 1\n2 1 2"), ParseErrorKind::DuplicateEdge);
  EXPECT_EQ(parse_line("2 2\n1 2 1\n2 1 2"), 3u);
  EXPECT_EQ(parse_kind("2 1\n1 1 1"), ParseErrorKind::SelfLoop);
  EXPECT_EQ(parse_kind("2 1\n1 3 1"), ParseErrorKind::OutOfRange);
  EXPECT_EQ(parse_kind("2 1\n0 1 1"), ParseErrorKind::OutOfRange);
  EXPECT_EQ(parse_kind("2 1\n1 2 -1"), ParseErrorKind::BadWeight);
  EXPECT_EQ(parse_kind("2 1\n1 2 nan"), ParseErrorKind::BadWeight);
  EXPECT_EQ(parse_kind("2 1\n1 2"), ParseErrorKind::Malformed);
  EXPECT_EQ(parse_kind("2 2\n1 2 1"), ParseErrorKind::CountMismatch);
  EXPECT_EQ(parse_line("2 1\n\n# c\n1 x 1"), 4u);
}

TEST(ParseEdgeList, ErrorMessageMentionsLine) {
  try {
    parse_edge_list(std::string("3 1\n2 2 1"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(WriteEdgeList, CanonicalRoundTrip) {
  const Graph g = parse_edge_list(std::string("3 3\n3 1 0.25\n2 1 1\n3 2 2\n"));
  std::ostringstream out;
  write_edge_list(out, g);
  const Graph h = parse_edge_list(out.str());
  EXPECT_EQ(g.digest(), h.digest());
  ASSERT_EQ(h.edges().size(), 3u);
  EXPECT_EQ(h.edges()[0].u, 0u);
  EXPECT_EQ(h.edges()[0].v, 1u);
  EXPECT_EQ(h.edges()[2].u, 1u);
}

TEST(Graph, InsertionOrderDoesNotMatter) {
  const Graph a(3, {{0, 1, 1.0}, {1, 2, 2.0}});
  const Graph b(3, {{2, 1, 2.0}, {1, 0, 1.0}});
  EXPECT_EQ(a.digest(), b.digest());
  const Graph c(3, {{0, 1, 1.0}, {1, 2, 2.5}});
  EXPECT_NE(a.digest(), c.digest());
}

TEST(Graph, BoundaryIsComplementSymmetric) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = testing::random_connected_graph(seed, 7);
    for (std::uint64_t mask = 0; mask < (1u << 7); ++mask) {
      const VertexSet s = VertexSet::from_mask(7, mask);
      EXPECT_NEAR(g.boundary_weight(s), g.boundary_weight(s.complement()), 1e-12);
      EXPECT_NEAR(g.volume(s), 2.0 * g.internal_weight(s) + g.boundary_weight(s), 1e-12);
    }
  }
}

TEST(Graph, CrossWeightOnTriangle) {
  const Graph g = testing::k3();
  EXPECT_DOUBLE_EQ(g.cross_weight(VertexSet(3, {0}), VertexSet(3, {1})), 1.0);
  EXPECT_DOUBLE_EQ(g.cross_weight(VertexSet(3, {0}), VertexSet(3, {1, 2})), 2.0);
  EXPECT_THROW(g.cross_weight(VertexSet(3, {0, 1}), VertexSet(3, {1})), InvalidArgument);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(2, {{0, 0, 1.0}}), InvalidArgument);
  EXPECT_THROW(Graph(2, {{0, 2, 1.0}}), InvalidArgument);
  EXPECT_THROW(Graph(2, {{0, 1, 1.0}, {1, 0, 1.0}}), InvalidArgument);
  EXPECT_THROW(Graph(2, {{0, 1, -0.5}}), InvalidArgument);
}

TEST(VertexSet, AlgebraAndText) {
  const VertexSet a(5, {0, 2});
  const VertexSet b(5, {2, 3});
  EXPECT_EQ(to_text(a | b), "{1,3,4}");
  EXPECT_EQ(to_text(a & b), "{3}");
  EXPECT_EQ(to_text(a - b), "{1}");
  EXPECT_EQ(a.complement().count(), 3u);
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_FALSE(a.is_disjoint(b));
  EXPECT_EQ(VertexSet::from_mask(5, a.mask()), a);
}

TEST(VertexSet, WideUniverse) {
  VertexSet s(130);
  s.insert(0);
  s.insert(64);
  s.insert(129);
  EXPECT_EQ(s.members(), (std::vector<std::size_t>{0, 64, 129}));
  EXPECT_EQ(s.complement().count(), 127u);
}

}  // namespace
}  // namespace setpair
