#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "icl/graph.hpp"
#include "icl/pqtree.hpp"

namespace fx {

using icl::IntervalGraph;
using icl::VertexId;
using icl::VertexSet;

inline IntervalGraph path(int n) {
  // consecutive intervals touch at one point
  std::vector<icl::Interval> m;
  for (int i = 0; i < n; ++i) m.push_back({3LL * i, 3LL * i + 3});
  return icl::graph_from_intervals(m);
}

inline IntervalGraph complete(int n) { return icl::graph_from_intervals(std::vector<icl::Interval>(n, {0, 1})); }

inline IntervalGraph star3() { return IntervalGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

inline IntervalGraph cycle(int n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return IntervalGraph::from_edges(n, e);
}

// chordal with an asteroidal triple: triangle with a pendant path of length 2 at each corner
inline IntervalGraph tripod() {
  return IntervalGraph::from_edges(9, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {1, 5}, {5, 6}, {2, 7}, {7, 8}});
}

// 3-sun: chordal with an asteroidal triple
inline IntervalGraph three_sun() {
  return IntervalGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}});
}

struct Named {
  IntervalGraph g;
  std::map<std::string, VertexId> id;

  VertexSet set(std::initializer_list<const char*> names) const {
    VertexSet s;
    for (auto n : names) s.push_back(id.at(n));
    std::sort(s.begin(), s.end());
    return s;
  }
};

// Graph whose labeled tree has a Q root over two P-nodes and an inner Q-node.
inline Named mixed_root() {
  const std::vector<std::pair<std::string, icl::Interval>> layout = {
      {"a1", {0, 2}},   {"a2", {0, 0}},   {"a3", {2, 2}},   {"f", {0, 6}},    {"b1", {4, 4}},   {"b2", {4, 4}},
      {"b3", {6, 6}},   {"g", {4, 16}},   {"c1", {8, 8}},   {"c2", {8, 10}},  {"c3", {8, 12}},  {"c4", {8, 14}},
      {"d1", {10, 16}}, {"d2", {12, 16}}, {"d3", {14, 16}}, {"d4", {16, 16}}, {"e1", {10, 14}}, {"e2", {10, 14}}};
  Named out;
  std::vector<icl::Interval> m;
  for (const auto& [name, iv] : layout) {
    out.id[name] = static_cast<VertexId>(m.size());
    m.push_back(iv);
  }
  out.g = icl::graph_from_intervals(m);
  return out;
}

// All orders of the cliques in which every vertex occupies a consecutive run.
inline std::set<std::vector<int>> consecutive_orders(int n, const std::vector<VertexSet>& cliques) {
  std::set<std::vector<int>> out;
  std::vector<int> p(cliques.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
  do {
    bool ok = true;
    for (VertexId v = 0; v < n && ok; ++v) {
      int first = -1, last = -1, count = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (std::binary_search(cliques[p[i]].begin(), cliques[p[i]].end(), v)) {
          if (first < 0) first = static_cast<int>(i);
          last = static_cast<int>(i);
          ++count;
        }
      ok = count == 0 || last - first + 1 == count;
    }
    if (ok) out.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every frontier reachable by P-permutations and Q-reversals.
inline std::set<std::vector<int>> all_frontiers(const icl::PQTree& t) {
  std::function<std::set<std::vector<int>>(int)> go = [&](int x) -> std::set<std::vector<int>> {
    const auto& nd = t.nodes[x];
    if (nd.kind == icl::NodeKind::Leaf) return {{nd.clique}};
    std::vector<std::set<std::vector<int>>> kids;
    for (int c : nd.children) kids.push_back(go(c));
    std::vector<std::vector<int>> arrangements;
    std::vector<int> idx(kids.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    if (nd.kind == icl::NodeKind::P) {
      do arrangements.push_back(idx);
      while (std::next_permutation(idx.begin(), idx.end()));
    } else {
      arrangements.push_back(idx);
      std::reverse(idx.begin(), idx.end());
      arrangements.push_back(idx);
    }
    std::set<std::vector<int>> out;
    for (const auto& arr : arrangements) {
      std::set<std::vector<int>> acc{{}};
      for (int i : arr) {
        std::set<std::vector<int>> next;
        for (const auto& pre : acc)
          for (const auto& tail : kids[i]) {
            auto s = pre;
            s.insert(s.end(), tail.begin(), tail.end());
            next.insert(s);
          }
        acc = std::move(next);
      }
      out.insert(acc.begin(), acc.end());
    }
    return out;
  };
  if (t.root < 0) return {};
  return go(t.root);
}

}  // namespace fx
