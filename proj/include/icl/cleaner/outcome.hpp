#pragma once

#include <string>
#include <variant>
#include <vector>

#include "../instance.hpp"

namespace icl {

// Sub-instance plus, for every vertex of its g, the vertex id in the parent g.
struct SubInstance {
  CleaningInstance instance;
  std::vector<VertexId> origin;
};

struct NecessarySet {
  VertexSet vertices;
};

struct IndependentSubproblem {
  SubInstance sub;
};

struct DirectSolution {
  Solution solution;
};

struct Reject {
  std::string reason;
};

using BranchResult = std::variant<NecessarySet, IndependentSubproblem, DirectSolution, Reject>;

struct ReducedInput {
  SubInstance sub;
};

struct Branches {
  std::vector<BranchResult> results;
};

using AOutcome = std::variant<ReducedInput, Branches>;

inline SubInstance make_sub(const IntervalGraph& gprime, const VertexSet& keep_prime, const IntervalGraph& g,
                            const VertexSet& keep) {
  SubInstance s;
  s.instance.gprime = induced_subgraph(gprime, keep_prime);
  s.instance.g = induced_subgraph(g, keep);
  s.origin = keep;
  return s;
}

}  // namespace icl
