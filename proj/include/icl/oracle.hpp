#pragma once

#include <algorithm>
#include <cstdint>
#include <climits>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "graph.hpp"
#include "instance.hpp"

namespace icl {

// Exhaustive bijection search, degree-compatible, vertices of g1 taken by descending degree.
inline std::optional<std::vector<VertexId>> brute_force_iso(const IntervalGraph& g1, const IntervalGraph& g2,
                                                            int limit_n = 9) {
  if (g1.size() > limit_n || g2.size() > limit_n) throw GraphError("instance too large for exhaustive isomorphism");
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  const int n = g1.size();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g1.degree(a) > g1.degree(b); });
  std::vector<VertexId> phi(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> go = [&](int i) {
    if (i == n) return true;
    VertexId u = order[i];
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || g2.degree(w) != g1.degree(u)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g1.adjacent(u, order[j]) == g2.adjacent(w, phi[order[j]]);
      if (!ok) continue;
      phi[u] = w;
      used[w] = 1;
      if (go(i + 1)) return true;
      used[w] = 0;
    }
    phi[u] = -1;
    return false;
  };
  if (!go(0)) return std::nullopt;
  return phi;
}

// First k-subset in lexicographic order whose deletion leaves a copy of gprime.
inline std::optional<Solution> brute_force_clean(const CleaningInstance& inst, int limit_n = 12) {
  const int n = inst.g.size(), k = inst.k();
  if (n > limit_n) throw GraphError("instance too large for exhaustive cleaning");
  if (k < 0) return std::nullopt;
  std::vector<int> target_deg;
  for (VertexId v = 0; v < inst.gprime.size(); ++v) target_deg.push_back(inst.gprime.degree(v));
  std::sort(target_deg.begin(), target_deg.end());
  std::vector<VertexId> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    IntervalGraph rest = delete_vertices(inst.g, VertexSet(pick.begin(), pick.end()));
    std::vector<int> deg;
    for (VertexId v = 0; v < rest.size(); ++v) deg.push_back(rest.degree(v));
    std::sort(deg.begin(), deg.end());
    if (deg == target_deg && brute_force_iso(inst.gprime, rest, limit_n)) return Solution{VertexSet(pick.begin(), pick.end())};
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

// Exhaustive maximal-clique enumeration over all subsets; small graphs only.
inline std::vector<VertexSet> brute_force_maximal_cliques(const IntervalGraph& g) {
  const int n = g.size();
  if (n > 20) throw GraphError("instance too large for subset enumeration");
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (!is_clique(g, s)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(mask >> v & 1)) {
        bool all = true;
        for (VertexId u : s) all = all && g.adjacent(u, v);
        if (all) maximal = false;
      }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Backtracking search for an induced copy of h inside g; phi[v] is the image of v.
// Candidate sets are bitsets over V(g), narrowed after every placement; the smallest set is tried next.
inline std::optional<std::vector<VertexId>> find_induced_embedding(const IntervalGraph& h, const IntervalGraph& g) {
  using Bits = std::vector<std::uint64_t>;
  const int nh = h.size(), ng = g.size();
  if (nh > ng) return std::nullopt;
  const std::size_t words = (static_cast<std::size_t>(ng) + 63) / 64;
  auto test = [](const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1ULL; };
  auto set = [](Bits& b, int i) { b[i >> 6] |= 1ULL << (i & 63); };
  std::vector<Bits> nb(ng, Bits(words, 0)), non(ng, Bits(words, 0));
  for (VertexId w = 0; w < ng; ++w)
    for (VertexId x = 0; x < ng; ++x)
      if (x != w) set(g.adjacent(w, x) ? nb[w] : non[w], x);
  std::vector<Bits> dom(nh, Bits(words, 0));
  for (VertexId u = 0; u < nh; ++u)
    for (VertexId w = 0; w < ng; ++w)
      if (g.degree(w) >= h.degree(u)) set(dom[u], w);
  auto count = [](const Bits& b) {
    int c = 0;
    for (auto x : b) c += __builtin_popcountll(x);
    return c;
  };
  std::vector<VertexId> phi(nh, -1);
  std::function<bool(std::vector<Bits>&, int)> go = [&](std::vector<Bits>& d, int placed) {
    if (placed == nh) return true;
    VertexId u = -1;
    int best = INT_MAX;
    for (VertexId v = 0; v < nh; ++v) {
      if (phi[v] >= 0) continue;
      const int c = count(d[v]);
      if (c < best) {
        best = c;
        u = v;
      }
    }
    if (best == 0) return false;
    for (VertexId w = 0; w < ng; ++w) {
      if (!test(d[u], w)) continue;
      std::vector<Bits> next = d;
      bool ok = true;
      for (VertexId v = 0; v < nh && ok; ++v) {
        if (v == u || phi[v] >= 0) continue;
        const Bits& keep = h.adjacent(u, v) ? nb[w] : non[w];
        bool any = false;
        for (std::size_t i = 0; i < words; ++i) {
          next[v][i] &= keep[i];
          any = any || next[v][i] != 0;
        }
        ok = any;
      }
      if (!ok) continue;
      phi[u] = w;
      if (go(next, placed + 1)) return true;
      phi[u] = -1;
    }
    return false;
  };
  if (!go(dom, 0)) return std::nullopt;
  return phi;
}

// Endpoints in [0, 4n]; lengths uniform in [1, knob * n].
inline IntervalGraph random_interval_graph(int n, std::uint64_t seed, double knob) {
  if (n < 1) throw GraphError("random_interval_graph needs n >= 1");
  std::mt19937_64 rng(seed);
  const long long span = 4LL * n;
  const long long maxlen = std::max<long long>(1, static_cast<long long>(knob * n));
  std::uniform_int_distribution<long long> left(0, span), len(1, maxlen);
  std::vector<Interval> model(n);
  for (auto& iv : model) {
    iv.left = left(rng);
    iv.right = std::min(span, iv.left + len(rng));
    if (iv.right < iv.left) iv.right = iv.left;
  }
  return graph_from_intervals(model);
}

inline std::vector<VertexId> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Knob drawn from the seed unless given.
inline PlantedInstance plant_instance(int n, int k, std::uint64_t seed, double knob = 0.0) {
  if (k < 0 || k >= n) throw GraphError("plant_instance needs 0 <= k < n");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  if (knob <= 0.0) {
    static const double knobs[] = {0.25, 0.5, 1.0, 2.0};
    knob = knobs[rng() % 4];
  }
  IntervalGraph g = random_interval_graph(n, seed, knob);
  auto perm = random_permutation(n, rng);
  VertexSet planted(perm.begin(), perm.begin() + k);
  std::sort(planted.begin(), planted.end());
  IntervalGraph rest = delete_vertices(g, planted);
  IntervalGraph gp = relabel(rest, random_permutation(rest.size(), rng));
  return {{gp, g}, planted, seed};
}

}  // namespace icl
