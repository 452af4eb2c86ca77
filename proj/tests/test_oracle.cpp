#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "icl/cleaner.hpp"
#include "icl/oracle.hpp"

using namespace icl;

namespace {

bool is_induced_copy(const IntervalGraph& h, const IntervalGraph& g, const std::vector<VertexId>& phi) {
  if (static_cast<int>(phi.size()) != h.size()) return false;
  std::vector<char> used(g.size(), 0);
  for (VertexId w : phi) {
    if (w < 0 || w >= g.size() || used[w]) return false;
    used[w] = 1;
  }
  for (VertexId u = 0; u < h.size(); ++u)
    for (VertexId v = u + 1; v < h.size(); ++v)
      if (h.adjacent(u, v) != g.adjacent(phi[u], phi[v])) return false;
  return true;
}

// induced copy by trying every vertex subset of the right size
bool embeds_by_subsets(const IntervalGraph& h, const IntervalGraph& g) {
  const int n = g.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != h.size()) continue;
    VertexSet keep;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) keep.push_back(v);
    if (brute_force_iso(h, induced_subgraph(g, keep))) return true;
  }
  return false;
}

}  // namespace

TEST(BruteForceClean, PathEndpointFirst) {
  const auto s = brute_force_clean({fx::path(4), fx::path(5)});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->deleted, VertexSet{0});
}

TEST(BruteForceClean, EdgeInsidePathThree) {
  const auto s = brute_force_clean({fx::complete(2), fx::path(3)});
  ASSERT_TRUE(s);
  ASSERT_EQ(s->deleted.size(), 1u);
  EXPECT_NE(s->deleted[0], 1);
}

TEST(BruteForceClean, NoTriangleInPath) { EXPECT_FALSE(brute_force_clean({fx::complete(3), fx::path(4)})); }

TEST(BruteForceClean, RefusesLargeInstances) {
  EXPECT_THROW(brute_force_clean({fx::path(12), fx::path(13)}), GraphError);
  EXPECT_NO_THROW(brute_force_clean({fx::path(12), fx::path(13)}, 13));
}

TEST(BruteForceIso, IdenticalGraphsMatch) {
  const auto g = random_interval_graph(8, 1, 1.0);
  const auto phi = brute_force_iso(g, g);
  ASSERT_TRUE(phi);
  EXPECT_TRUE(is_isomorphism(g, g, *phi));
}

TEST(BruteForceIso, PathIsNotClaw) { EXPECT_FALSE(brute_force_iso(fx::path(4), fx::star3())); }

TEST(BruteForceIso, RefusesLargeGraphs) { EXPECT_THROW(brute_force_iso(fx::path(10), fx::path(10)), GraphError); }

TEST(BruteForceIso, AgreesWithCanonicalCodes) {
  std::mt19937_64 rng(9);
  int same = 0;
  for (int s = 0; s < 300; ++s) {
    const int n = 2 + s % 7;
    const auto a = random_interval_graph(n, 100 + s, 0.5 + s % 4);
    const auto b = s % 3 == 0 ? relabel(a, random_permutation(n, rng)) : random_interval_graph(n, 900 + s, 0.5 + s % 4);
    const auto phi = brute_force_iso(a, b);
    EXPECT_EQ(phi.has_value(), are_isomorphic(a, b)) << "seed " << s;
    if (phi) {
      EXPECT_TRUE(is_isomorphism(a, b, *phi));
      ++same;
    }
  }
  EXPECT_GT(same, 100);
}

TEST(RandomIntervalGraph, DeterministicPerSeed) {
  EXPECT_EQ(random_interval_graph(12, 5, 1.5), random_interval_graph(12, 5, 1.5));
  EXPECT_EQ(random_interval_graph(12, 5, 1.5).model(), random_interval_graph(12, 5, 1.5).model());
}

TEST(RandomIntervalGraph, SingleVertex) {
  const auto g = random_interval_graph(1, 4, 1.0);
  EXPECT_EQ(g.size(), 1);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_THROW(random_interval_graph(0, 4, 1.0), GraphError);
}

TEST(RandomIntervalGraph, AlwaysRecognised) {
  for (int s = 0; s < 200; ++s) {
    const auto g = random_interval_graph(1 + s % 25, s, 0.25 + (s % 8) * 0.5);
    EXPECT_NO_THROW(build_pqtree(g.without_model())) << "seed " << s;
    for (const auto& iv : g.model()) {
      EXPECT_GE(iv.left, 0);
      EXPECT_LE(iv.right, 4LL * g.size());
    }
  }
}

TEST(PlantInstance, PlantedSetIsASolution) {
  for (int s = 0; s < 100; ++s) {
    const auto p = plant_instance(4 + s % 7, s % 4, s);
    ASSERT_EQ(static_cast<int>(p.planted.size()), p.instance.k());
    EXPECT_TRUE(brute_force_iso(delete_vertices(p.instance.g, p.planted), p.instance.gprime, 10)) << "seed " << s;
    EXPECT_EQ(p.seed, static_cast<std::uint64_t>(s));
  }
}

TEST(PlantInstance, SolverSaysYes) {
  for (int s = 0; s < 60; ++s) {
    const auto p = plant_instance(6 + s % 5, 1 + s % 3, 300 + s);
    EXPECT_TRUE(interval_cleaning(p.instance)) << "seed " << s;
  }
}

TEST(PlantInstance, ZeroDeletionsGivesRelabelledCopy) {
  const auto p = plant_instance(8, 0, 12);
  EXPECT_TRUE(p.planted.empty());
  EXPECT_TRUE(brute_force_iso(p.instance.gprime, p.instance.g));
  EXPECT_THROW(plant_instance(5, 5, 1), GraphError);
}

TEST(InducedEmbedding, AgreesWithSubsetSearch) {
  int found = 0;
  for (int s = 0; s < 200; ++s) {
    const auto g = random_interval_graph(5 + s % 4, 40 + s, 0.5 + s % 3);
    const auto h = random_interval_graph(2 + s % 4, 700 + s, 0.5 + s % 4);
    const auto phi = find_induced_embedding(h, g);
    EXPECT_EQ(phi.has_value(), embeds_by_subsets(h, g)) << "seed " << s;
    if (phi) {
      EXPECT_TRUE(is_induced_copy(h, g, *phi));
      ++found;
    }
  }
  EXPECT_GT(found, 20);
}

TEST(InducedEmbedding, LargerPatternNeverFits) {
  EXPECT_FALSE(find_induced_embedding(fx::path(5), fx::path(4)));
  EXPECT_FALSE(find_induced_embedding(fx::complete(2), IntervalGraph(3)));
  EXPECT_TRUE(find_induced_embedding(IntervalGraph(0), fx::path(2)));
}
