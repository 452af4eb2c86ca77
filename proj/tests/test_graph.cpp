#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "icl/graph.hpp"
#include "icl/io.hpp"
#include "icl/oracle.hpp"
#include "icl/pqtree.hpp"

using namespace icl;

TEST(GraphFromIntervals, PathFromTouchingIntervals) {
  auto g = graph_from_intervals({{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(GraphFromIntervals, IdenticalIntervalsGiveTriangle) {
  auto g = graph_from_intervals({{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(GraphFromIntervals, GadgetEndpointsAtIndexOne) {
  // a_1^+ = [2,5], b_1^+ = [4,7]
  auto g = graph_from_intervals({{2, 5}, {4, 7}});
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(GraphFromIntervals, RejectsMalformed) {
  EXPECT_THROW(graph_from_intervals({{3, 1}}), GraphError);
}

TEST(GraphFromIntervals, MatchesPairwiseIntersection) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto g = random_interval_graph(12, seed, 0.7);
    for (VertexId u = 0; u < g.size(); ++u)
      for (VertexId v = 0; v < g.size(); ++v)
        if (u != v) {
          ASSERT_EQ(g.adjacent(u, v), g.interval(u).intersects(g.interval(v)));
        }
  }
}

TEST(Cliques, PathHasTwoCliques) {
  auto p3 = fx::path(3);
  auto c3 = maximal_cliques_ordered(p3);
  EXPECT_EQ(c3, (std::vector<VertexSet>{{0, 1}, {1, 2}}));
}

TEST(Cliques, TriangleSingleClique) {
  EXPECT_EQ(maximal_cliques_ordered(fx::complete(3)), (std::vector<VertexSet>{{0, 1, 2}}));
}

TEST(Cliques, MatchExhaustiveEnumerationAndAreConsecutive) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int n = 1 + static_cast<int>(seed % 10);
    auto g = random_interval_graph(n, seed, 0.3 + 0.1 * (seed % 12));
    auto ordered = maximal_cliques_ordered(g);
    auto sorted = ordered;
    std::sort(sorted.begin(), sorted.end());
    ASSERT_EQ(sorted, brute_force_maximal_cliques(g)) << "seed " << seed;
    EXPECT_LE(static_cast<int>(ordered.size()), n);
    for (VertexId v = 0; v < n; ++v) {
      int first = -1, last = -1, count = 0;
      for (int i = 0; i < static_cast<int>(ordered.size()); ++i)
        if (std::binary_search(ordered[i].begin(), ordered[i].end(), v)) {
          if (first < 0) first = i;
          last = i;
          ++count;
        }
      ASSERT_EQ(last - first + 1, count);
    }
    // same cliques when the model is dropped and recognition runs instead
    auto plain = maximal_cliques_ordered(g.without_model());
    std::sort(plain.begin(), plain.end());
    ASSERT_EQ(plain, sorted);
  }
}

TEST(Structure, UniversalVerticesOfPath) {
  EXPECT_EQ(universal_vertices(fx::path(3)), (VertexSet{1}));
  EXPECT_TRUE(universal_vertices(fx::path(4)).empty());
}

TEST(Structure, ComponentsOfTwoEdges) {
  auto g = IntervalGraph::from_edges(4, {{0, 1}, {2, 3}});
  auto cs = connected_components(g);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0], (VertexSet{0, 1}));
  EXPECT_EQ(cs[1], (VertexSet{2, 3}));
}

TEST(Structure, InducedSubgraphOfPath) {
  auto h = induced_subgraph(fx::path(4), {0, 1, 2});
  EXPECT_EQ(h, fx::path(3));
  EXPECT_TRUE(h.has_model());
  EXPECT_THROW(induced_subgraph(fx::path(4), {0, 7}), GraphError);
  EXPECT_THROW(induced_subgraph(fx::path(4), {1, 1}), GraphError);
}

TEST(CompleteModule, PathExamples) {
  auto g = fx::path(3);
  EXPECT_TRUE(is_complete_module(g, {0}));
  EXPECT_FALSE(is_complete_module(g, {1}));
  EXPECT_TRUE(is_complete_module(g, {0, 1, 2}));
  EXPECT_THROW(is_complete_module(g, {}), GraphError);
}

namespace {

// literal three-clause definition
bool complete_by_definition(const IntervalGraph& g, const VertexSet& m) {
  std::vector<char> in(g.size(), 0);
  for (VertexId v : m) in[v] = 1;
  for (VertexId x = 0; x < g.size(); ++x) {
    if (in[x]) continue;
    int hits = 0;
    for (VertexId v : m) hits += g.adjacent(x, v);
    if (hits != 0 && hits != static_cast<int>(m.size())) return false;
  }
  // connectivity by repeated closure
  std::vector<char> reach(g.size(), 0);
  reach[m[0]] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (VertexId u : m)
      for (VertexId v : m)
        if (reach[u] && !reach[v] && g.adjacent(u, v)) reach[v] = grew = true;
  }
  for (VertexId v : m)
    if (!reach[v]) return false;
  for (VertexId x = 0; x < g.size(); ++x) {
    if (in[x]) continue;
    bool nbr = false;
    for (VertexId v : m) nbr = nbr || g.adjacent(x, v);
    if (!nbr) continue;
    bool inside = true;
    for (VertexId y = 0; y < g.size(); ++y) {
      if (!g.adjacent(x, y) || in[y]) continue;
      bool y_in_nm = false;
      for (VertexId v : m) y_in_nm = y_in_nm || g.adjacent(y, v);
      if (!y_in_nm) inside = false;
    }
    if (inside) return false;
  }
  return true;
}

}  // namespace

TEST(CompleteModule, AgreesWithDefinitionOnAllSubsets) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 2 + static_cast<int>(seed % 7);
    auto g = random_interval_graph(n, seed, 0.5 + 0.2 * (seed % 5));
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      VertexSet m;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) m.push_back(v);
      ASSERT_EQ(is_complete_module(g, m), complete_by_definition(g, m)) << "seed " << seed << " mask " << mask;
    }
  }
}

TEST(Io, RoundTripGraphAndModel) {
  auto g = random_interval_graph(9, 7, 1.0);
  std::stringstream gs, ms;
  write_graph(gs, g);
  write_model(ms, g.model());
  auto back = read_graph(gs);
  EXPECT_EQ(back, g);
  auto model = read_model(ms);
  EXPECT_EQ(model, g.model());
  EXPECT_EQ(back.with_model(model), g);
}

TEST(Io, CommentsAndErrors) {
  std::stringstream ok("# header\n3 2\n0 1\n# mid\n1 2\n");
  EXPECT_EQ(read_graph(ok), fx::path(3));
  std::stringstream bad("3 2\n0 1\n");
  EXPECT_THROW(read_graph(bad), GraphError);
  std::stringstream loop("2 1\n1 1\n");
  EXPECT_THROW(read_graph(loop), GraphError);
  std::stringstream ids("0 0 1\n0 2 3\n");
  EXPECT_THROW(read_model(ids), GraphError);
}

TEST(Io, ModelMustAgreeWithAdjacency) {
  auto g = fx::path(3).without_model();
  EXPECT_THROW(g.with_model({{0, 5}, {1, 2}, {3, 4}}), GraphError);
  EXPECT_NO_THROW(g.with_model({{0, 1}, {1, 2}, {2, 3}}));
}
