#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "../graph.hpp"
#include "../pqtree.hpp"

namespace icl {

// The children of a Q-node root seen as positions 1..m. Vertices below child i get the block [i,i];
// root vertices keep their own block. Everything is indexed 1-based; slot 0 is unused.
struct RootView {
  const IntervalGraph* g = nullptr;
  int m = 0;
  std::vector<VertexSet> X;
  std::vector<CanonicalCode> xcode;
  std::vector<int> lo, hi;  // per vertex
  std::vector<char> at_root;
  std::vector<VertexSet> mplus;   // root vertices starting at i, by (right end, id)
  std::vector<VertexSet> mminus;  // root vertices ending at i, by (left end, id)
  std::map<std::pair<int, int>, VertexSet> L;
  std::vector<int> wl;  // wl[i]: vertices whose block lies in [1,i]
  std::vector<int> wr;  // wr[i]: vertices whose block lies in [i,m]
  VertexSet roots;

  int Lcount(int a, int b) const {
    auto it = L.find({a, b});
    return it == L.end() ? 0 : static_cast<int>(it->second.size());
  }
  const VertexSet& Lset(int a, int b) const {
    static const VertexSet none;
    auto it = L.find({a, b});
    return it == L.end() ? none : it->second;
  }

  // union of M^+(h) and X_h over h in [i1,i2]
  VertexSet bplus(int i1, int i2) const {
    VertexSet out;
    for (int h = std::max(i1, 1); h <= std::min(i2, m); ++h) {
      out.insert(out.end(), X[h].begin(), X[h].end());
      out.insert(out.end(), mplus[h].begin(), mplus[h].end());
    }
    normalize(out);
    return out;
  }

  RootView reversed() const {
    RootView r;
    r.g = g;
    r.m = m;
    r.X.assign(m + 1, {});
    r.xcode.assign(m + 1, {});
    for (int i = 1; i <= m; ++i) {
      r.X[m - i + 1] = X[i];
      r.xcode[m - i + 1] = xcode[i];
    }
    r.lo.assign(lo.size(), 0);
    r.hi.assign(hi.size(), 0);
    for (std::size_t v = 0; v < lo.size(); ++v) {
      r.lo[v] = m - hi[v] + 1;
      r.hi[v] = m - lo[v] + 1;
    }
    r.at_root = at_root;
    r.finish();
    return r;
  }

  void finish() {
    const int n = static_cast<int>(lo.size());
    mplus.assign(m + 1, {});
    mminus.assign(m + 1, {});
    L.clear();
    roots.clear();
    wl.assign(m + 2, 0);
    wr.assign(m + 2, 0);
    for (VertexId v = 0; v < n; ++v) {
      ++wl[hi[v]];
      ++wr[lo[v]];
      if (!at_root[v]) continue;
      roots.push_back(v);
      mplus[lo[v]].push_back(v);
      mminus[hi[v]].push_back(v);
      L[{lo[v], hi[v]}].push_back(v);
    }
    for (int i = 1; i <= m; ++i) wl[i] += wl[i - 1];
    for (int i = m - 1; i >= 1; --i) wr[i] += wr[i + 1];
    for (int i = 1; i <= m; ++i) {
      std::sort(mplus[i].begin(), mplus[i].end(), [&](VertexId a, VertexId b) { return std::pair(hi[a], a) < std::pair(hi[b], b); });
      std::sort(mminus[i].begin(), mminus[i].end(), [&](VertexId a, VertexId b) { return std::pair(lo[a], a) < std::pair(lo[b], b); });
    }
  }
};

inline RootView make_root_view(const IntervalGraph& g, const LabeledPQTree& lt) {
  const int r = lt.tree.root;
  if (r < 0 || !lt.is_q(r)) throw std::logic_error("root view needs a Q-node root");
  RootView v;
  v.g = &g;
  v.m = lt.arity(r);
  v.X.assign(v.m + 1, {});
  v.xcode.assign(v.m + 1, {});
  v.lo.assign(g.size(), 0);
  v.hi.assign(g.size(), 0);
  v.at_root.assign(g.size(), 0);
  for (int i = 1; i <= v.m; ++i) {
    v.X[i] = lt.subtree_vertices(lt.node(r).children[i - 1]);
    v.xcode[i] = canonical_code(induced_subgraph(g, v.X[i]));
    for (VertexId x : v.X[i]) v.lo[x] = v.hi[x] = i;
  }
  for (VertexId x : lt.rinv[r]) {
    v.at_root[x] = 1;
    v.lo[x] = lt.block[x].first;
    v.hi[x] = lt.block[x].second;
  }
  v.finish();
  return v;
}

}  // namespace icl
