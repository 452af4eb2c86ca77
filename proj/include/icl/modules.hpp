#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "graph.hpp"
#include "pqtree.hpp"

namespace icl {

enum class Witness { Subtree, QBlock };

struct CompleteModule {
  VertexSet vertices;
  Witness witness = Witness::Subtree;
  int node = -1;     // subtree root, or the Q-node of the block
  int a = 0, b = 0;  // block, QBlock only
  bool simple = false;
  bool leaf = false;

  // smallest h for which the module is h-short
  std::optional<int> short_for() const {
    if (leaf) return 0;
    if (simple) return b - a;
    return std::nullopt;
  }
  bool is_short(int h) const {
    auto s = short_for();
    return s && *s <= h;
  }
};

inline std::vector<CompleteModule> complete_modules(const IntervalGraph& g, const LabeledPQTree& lt) {
  std::vector<CompleteModule> out;
  if (lt.tree.root < 0) return out;
  std::set<VertexSet> seen;
  std::vector<int> pre;
  std::vector<int> stack{lt.tree.root};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    pre.push_back(x);
    const auto& ch = lt.node(x).children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  std::vector<VertexSet> below(lt.tree.nodes.size());
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    int x = *it;
    below[x] = lt.rinv[x];
    for (int c : lt.node(x).children) below[x].insert(below[x].end(), below[c].begin(), below[c].end());
    std::sort(below[x].begin(), below[x].end());
  }
  for (int z : pre) {
    if (below[z].empty()) continue;
    if (lt.node(z).kind == NodeKind::P && lt.rinv[z].empty()) continue;
    if (!seen.insert(below[z]).second) continue;
    CompleteModule m;
    m.vertices = below[z];
    m.node = z;
    m.leaf = lt.node(z).kind == NodeKind::Leaf;
    out.push_back(std::move(m));
  }
  for (int q : pre) {
    if (!lt.is_q(q)) continue;
    const int m = lt.arity(q);
    std::vector<int> empty_prefix(m + 1, 0);
    for (int i = 1; i <= m; ++i)
      empty_prefix[i] = empty_prefix[i - 1] + (below[lt.node(q).children[i - 1]].empty() ? 1 : 0);
    auto lab = lt.labels(q);
    for (const auto& [blk, verts] : lab) {
      auto [a, b] = blk;
      if (empty_prefix[b] - empty_prefix[a - 1] != b - a + 1) continue;
      bool inner = false;
      for (const auto& [other, vs] : lab)
        if (other != blk && a <= other.first && other.second <= b) {
          inner = true;
          break;
        }
      if (inner) continue;
      if (!seen.insert(verts).second) continue;
      CompleteModule cm;
      cm.vertices = verts;
      cm.witness = Witness::QBlock;
      cm.node = q;
      cm.a = a;
      cm.b = b;
      cm.simple = true;
      out.push_back(std::move(cm));
    }
  }
  if (g.has_model()) {
    auto key = [&](const CompleteModule& m) {
      long long l = LLONG_MAX, r = LLONG_MIN;
      for (VertexId v : m.vertices) {
        l = std::min(l, g.interval(v).left);
        r = std::max(r, g.interval(v).right);
      }
      return std::tuple(l, r, m.vertices.front());
    };
    std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
  }
  return out;
}

inline std::vector<CompleteModule> complete_modules(const IntervalGraph& g) { return complete_modules(g, labeled_tree(g)); }

inline std::vector<CompleteModule> h_short_complete_modules(const IntervalGraph& g, const LabeledPQTree& lt, int h) {
  if (h < 0) throw GraphError("h must be non-negative");
  std::vector<CompleteModule> out;
  for (auto& m : complete_modules(g, lt))
    if (m.is_short(h)) out.push_back(std::move(m));
  return out;
}

namespace detail {

inline std::vector<VertexSet> matching_modules(const IntervalGraph& pattern, const IntervalGraph& g,
                                               const std::vector<CompleteModule>& mods) {
  std::vector<VertexSet> out;
  if (pattern.size() == 0) return out;
  const CanonicalCode want = canonical_code(pattern);
  for (const auto& m : mods) {
    if (static_cast<int>(m.vertices.size()) != pattern.size()) continue;
    IntervalGraph sub = induced_subgraph(g, m.vertices);
    if (sub.edge_count() != pattern.edge_count()) continue;
    if (canonical_code(sub) == want) out.push_back(m.vertices);
  }
  return out;
}

}  // namespace detail

// Complete modules of g inducing a copy of the pattern, in model order.
inline std::vector<VertexSet> occurrences_as_complete_module(const IntervalGraph& pattern, const IntervalGraph& g) {
  return detail::matching_modules(pattern, g, complete_modules(g));
}

// Same restricted to h-short modules; the pattern must be a clique.
inline std::vector<VertexSet> occurrences_as_short_module(const IntervalGraph& pattern, const IntervalGraph& g, int h) {
  if (!is_clique(pattern, all_vertices(pattern))) throw GraphError("pattern is not a clique");
  return detail::matching_modules(pattern, g, h_short_complete_modules(g, labeled_tree(g), h));
}

}  // namespace icl
