#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <iterator>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace icl {

using VertexId = int;
// sorted, duplicate free
using VertexSet = std::vector<VertexId>;

struct Interval {
  long long left = 0;
  long long right = 0;

  bool intersects(const Interval& o) const { return left <= o.right && o.left <= right; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct GraphError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotInterval : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IntervalGraph {
 public:
  IntervalGraph() = default;
  explicit IntervalGraph(int n) : n_(n), adj_(n), mat_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw GraphError("negative vertex count");
  }

  static IntervalGraph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    IntervalGraph g(n);
    for (auto [u, v] : edges) {
      g.check_vertex(u);
      g.check_vertex(v);
      if (u == v) throw GraphError("self loop at vertex " + std::to_string(u));
      g.mat_[g.at(u, v)] = g.mat_[g.at(v, u)] = 1;
    }
    g.rebuild_lists();
    return g;
  }

  int size() const { return n_; }
  bool adjacent(VertexId u, VertexId v) const { return mat_[at(u, v)] != 0; }
  const VertexSet& neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

  std::size_t edge_count() const {
    std::size_t s = 0;
    for (const auto& a : adj_) s += a.size();
    return s / 2;
  }

  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool has_model() const { return has_model_; }
  const std::vector<Interval>& model() const { return model_; }
  const Interval& interval(VertexId v) const { return model_[v]; }

  // Attaches a model after checking it reproduces the adjacency.
  IntervalGraph with_model(std::vector<Interval> model) const {
    if (static_cast<int>(model.size()) != n_) throw GraphError("model size mismatch");
    for (VertexId u = 0; u < n_; ++u) {
      if (model[u].left > model[u].right) throw GraphError("malformed interval at vertex " + std::to_string(u));
      for (VertexId v = u + 1; v < n_; ++v)
        if (model[u].intersects(model[v]) != adjacent(u, v))
          throw GraphError("model disagrees with adjacency at " + std::to_string(u) + "," + std::to_string(v));
    }
    IntervalGraph g = *this;
    g.model_ = std::move(model);
    g.has_model_ = true;
    return g;
  }

  IntervalGraph without_model() const {
    IntervalGraph g = *this;
    g.model_.clear();
    g.has_model_ = false;
    return g;
  }

  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw GraphError("unknown vertex id " + std::to_string(v));
  }

  // adjacency equality, models ignored
  friend bool operator==(const IntervalGraph& a, const IntervalGraph& b) { return a.n_ == b.n_ && a.mat_ == b.mat_; }

 private:
  friend IntervalGraph graph_from_intervals(const std::vector<Interval>& model);
  friend IntervalGraph induced_subgraph(const IntervalGraph& g, const std::vector<VertexId>& keep);

  std::size_t at(VertexId u, VertexId v) const { return static_cast<std::size_t>(u) * n_ + v; }

  void rebuild_lists() {
    for (VertexId u = 0; u < n_; ++u) {
      adj_[u].clear();
      for (VertexId v = 0; v < n_; ++v)
        if (mat_[at(u, v)]) adj_[u].push_back(v);
    }
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::uint8_t> mat_;
  std::vector<Interval> model_;
  bool has_model_ = false;
};

inline IntervalGraph graph_from_intervals(const std::vector<Interval>& model) {
  const int n = static_cast<int>(model.size());
  for (int v = 0; v < n; ++v)
    if (model[v].left > model[v].right) throw GraphError("malformed interval at vertex " + std::to_string(v));
  IntervalGraph g(n);
  // sweep by left endpoint, only compare against intervals still open
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return std::pair(model[a].left, a) < std::pair(model[b].left, b);
  });
  for (int i = 0; i < n; ++i) {
    VertexId u = order[i];
    for (int j = i + 1; j < n && model[order[j]].left <= model[u].right; ++j) {
      VertexId v = order[j];
      g.mat_[g.at(u, v)] = g.mat_[g.at(v, u)] = 1;
    }
  }
  g.rebuild_lists();
  g.model_ = model;
  g.has_model_ = true;
  return g;
}

// New vertex i is keep[i]; the model is restricted when present.
inline IntervalGraph induced_subgraph(const IntervalGraph& g, const std::vector<VertexId>& keep) {
  const int m = static_cast<int>(keep.size());
  std::vector<char> seen(g.size(), 0);
  for (VertexId v : keep) {
    g.check_vertex(v);
    if (seen[v]) throw GraphError("duplicate vertex id " + std::to_string(v));
    seen[v] = 1;
  }
  IntervalGraph h(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      h.mat_[h.at(i, j)] = (i != j && g.adjacent(keep[i], keep[j])) ? 1 : 0;
  h.rebuild_lists();
  if (g.has_model()) {
    h.model_.resize(m);
    for (int i = 0; i < m; ++i) h.model_[i] = g.interval(keep[i]);
    h.has_model_ = true;
  }
  return h;
}

inline VertexSet all_vertices(const IntervalGraph& g) {
  VertexSet v(g.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline void normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

// Components ordered by smallest member; each sorted.
inline std::vector<VertexSet> connected_components(const IntervalGraph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<VertexSet> out;
  for (VertexId s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    VertexSet c{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (VertexId w : g.neighbors(c[i]))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          c.push_back(w);
        }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

inline VertexSet universal_vertices(const IntervalGraph& g) {
  VertexSet out;
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.degree(v) == g.size() - 1) out.push_back(v);
  return out;
}

inline bool is_clique(const IntervalGraph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

// N(M) = vertices outside M with a neighbor in M
inline VertexSet open_neighborhood(const IntervalGraph& g, const VertexSet& m) {
  std::vector<char> in(g.size(), 0), mark(g.size(), 0);
  for (VertexId v : m) in[v] = 1;
  VertexSet out;
  for (VertexId v : m)
    for (VertexId w : g.neighbors(v))
      if (!in[w] && !mark[w]) {
        mark[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_module(const IntervalGraph& g, const VertexSet& m) {
  if (m.empty()) return true;
  std::vector<char> in(g.size(), 0);
  for (VertexId v : m) in[v] = 1;
  for (VertexId x = 0; x < g.size(); ++x) {
    if (in[x]) continue;
    bool first = g.adjacent(x, m[0]);
    for (VertexId v : m)
      if (g.adjacent(x, v) != first) return false;
  }
  return true;
}

inline bool is_connected_subset(const IntervalGraph& g, const VertexSet& m) {
  if (m.empty()) return true;
  std::vector<char> in(g.size(), 0), seen(g.size(), 0);
  for (VertexId v : m) in[v] = 1;
  std::vector<VertexId> stack{m[0]};
  seen[m[0]] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v))
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == m.size();
}

// Module, connected, and no outside neighbor x with N(x) inside N[M].
inline bool is_complete_module(const IntervalGraph& g, VertexSet m) {
  if (m.empty()) throw GraphError("empty module");
  normalize(m);
  for (VertexId v : m) g.check_vertex(v);
  if (!is_module(g, m) || !is_connected_subset(g, m)) return false;
  std::vector<char> closed(g.size(), 0);
  for (VertexId v : m) closed[v] = 1;
  VertexSet nm = open_neighborhood(g, m);
  for (VertexId v : nm) closed[v] = 1;
  for (VertexId x : nm) {
    bool inside = true;
    for (VertexId w : g.neighbors(x))
      if (!closed[w]) {
        inside = false;
        break;
      }
    if (inside) return false;
  }
  return true;
}

// Maximal cliques in left-to-right model order.
inline std::vector<VertexSet> model_cliques(const IntervalGraph& g) {
  if (!g.has_model()) throw GraphError("graph has no interval model");
  struct Event {
    long long x;
    int kind;  // 0 = open, 1 = close
    VertexId v;
  };
  std::vector<Event> ev;
  ev.reserve(2 * g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    ev.push_back({g.interval(v).left, 0, v});
    ev.push_back({g.interval(v).right, 1, v});
  }
  std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
    return std::tie(a.x, a.kind, a.v) < std::tie(b.x, b.kind, b.v);
  });
  std::vector<VertexSet> out;
  std::vector<char> active(g.size(), 0);
  bool opened = false;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const Event& e = ev[i];
    if (e.kind == 0) {
      active[e.v] = 1;
      opened = true;
      continue;
    }
    if (opened) {
      VertexSet c;
      for (VertexId v = 0; v < g.size(); ++v)
        if (active[v]) c.push_back(v);
      out.push_back(std::move(c));
      opened = false;
    }
    active[e.v] = 0;
  }
  return out;
}

// Maximal cliques of a chordal graph via maximum cardinality search; throws
// NotInterval when the graph is not chordal. Order is unspecified.
inline std::vector<VertexSet> chordal_maximal_cliques(const IntervalGraph& g) {
  const int n = g.size();
  std::vector<int> weight(n, 0), pos(n, -1);
  std::vector<VertexId> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    VertexId best = -1;
    for (VertexId v = 0; v < n; ++v)
      if (pos[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
    pos[best] = step;
    order.push_back(best);
    for (VertexId w : g.neighbors(best))
      if (pos[w] < 0) ++weight[w];
  }
  std::vector<VertexSet> cand;
  for (VertexId v : order) {
    VertexSet earlier;
    VertexId last = -1;
    for (VertexId w : g.neighbors(v))
      if (pos[w] < pos[v]) {
        earlier.push_back(w);
        if (last < 0 || pos[w] > pos[last]) last = w;
      }
    for (VertexId w : earlier)
      if (w != last && !g.adjacent(w, last)) throw NotInterval("graph is not chordal");
    earlier.push_back(v);
    std::sort(earlier.begin(), earlier.end());
    cand.push_back(std::move(earlier));
  }
  std::sort(cand.begin(), cand.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  std::vector<VertexSet> out;
  for (auto& c : cand) {
    bool contained = false;
    for (const auto& o : out)
      if (std::includes(o.begin(), o.end(), c.begin(), c.end())) {
        contained = true;
        break;
      }
    if (!contained) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace icl
