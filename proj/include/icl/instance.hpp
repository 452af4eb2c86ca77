#pragma once

#include <cstdint>

#include "graph.hpp"

namespace icl {

// Delete |V(g)| - |V(gprime)| vertices of g to obtain a copy of gprime.
struct CleaningInstance {
  IntervalGraph gprime;
  IntervalGraph g;

  int k() const { return g.size() - gprime.size(); }
};

struct Solution {
  VertexSet deleted;
};

struct PlantedInstance {
  CleaningInstance instance;
  VertexSet planted;
  std::uint64_t seed = 0;
};

// new id of v is perm[v]
inline IntervalGraph relabel(const IntervalGraph& g, const std::vector<VertexId>& perm) {
  std::vector<VertexId> keep(g.size());
  for (VertexId v = 0; v < g.size(); ++v) keep.at(perm.at(v)) = v;
  return induced_subgraph(g, keep);
}

inline IntervalGraph delete_vertices(const IntervalGraph& g, const VertexSet& s) {
  return induced_subgraph(g, set_difference(all_vertices(g), s));
}

}  // namespace icl
