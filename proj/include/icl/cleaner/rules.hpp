#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "../modules.hpp"
#include "../pqtree.hpp"
#include "outcome.hpp"
#include "trace.hpp"

namespace icl {

namespace detail {

inline std::vector<VertexSet> components_by_min(const IntervalGraph& g) {
  auto comps = connected_components(g);
  for (auto& c : comps) normalize(c);
  std::sort(comps.begin(), comps.end());
  return comps;
}

inline NecessarySet singleton(VertexId v) { return NecessarySet{{v}}; }

// Vertices ordered by right endpoint in the model, ties by id.
inline VertexSet by_right_end(const IntervalGraph& g) {
  VertexSet order = all_vertices(g);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.interval(a).right < g.interval(b).right; });
  return order;
}

}  // namespace detail

// A component of G isomorphic to a component of G': drop both.
inline std::optional<ReducedInput> rule_isomorphic_components(const CleaningInstance& inst) {
  const auto cg = detail::components_by_min(inst.g);
  const auto cp = detail::components_by_min(inst.gprime);
  std::map<CanonicalCode, std::size_t> prime_codes;
  for (std::size_t t = 0; t < cp.size(); ++t)
    prime_codes.emplace(canonical_code(induced_subgraph(inst.gprime, cp[t])), t);
  for (const auto& c : cg) {
    auto it = prime_codes.find(canonical_code(induced_subgraph(inst.g, c)));
    if (it == prime_codes.end()) continue;
    return ReducedInput{make_sub(inst.gprime, set_difference(all_vertices(inst.gprime), cp[it->second]), inst.g,
                                 set_difference(all_vertices(inst.g), c))};
  }
  return std::nullopt;
}

// G' has at least 4k+1 components: locate the image of one of them and take a neighbour of it.
inline std::optional<Branches> rule_many_components(const CleaningInstance& inst, const TraceContext& tc = {}) {
  const int k = inst.k();
  auto comps = detail::components_by_min(inst.gprime);
  if (static_cast<int>(comps.size()) < 4 * k + 1) return std::nullopt;
  std::stable_sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  comps.resize(4 * k + 1);
  const int h = (k + 1) / 2;

  std::vector<IntervalGraph> parts;
  for (const auto& c : comps) parts.push_back(induced_subgraph(inst.gprime, c));

  Branches out;
  std::set<VertexId> emitted;
  bool rejected = false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool clique = is_clique(parts[i], all_vertices(parts[i]));
    auto occurrences = [&](const IntervalGraph& host) {
      return clique ? occurrences_as_short_module(parts[i], host, h) : occurrences_as_complete_module(parts[i], host);
    };
    const auto found = occurrences(inst.g);
    // Distinct values of the preceding-occurrence count over all indicator vectors.
    std::set<int> sums{0};
    for (std::size_t j = 0; j < i; ++j) {
      const int c = static_cast<int>(occurrences(parts[j]).size());
      if (c == 0) continue;
      std::set<int> next = sums;
      for (int s : sums) next.insert(s + c);
      sums = std::move(next);
    }
    const int total = static_cast<int>(found.size());
    for (int before : sums) {
      int lo, hi;
      if (clique) {
        lo = before - k * (3 * h + 5) + 1;
        hi = before + k * (4 * h + 3) + 1;
      } else {
        lo = before - 4 * k + 1;
        hi = before + 4 * k + 1;
      }
      for (int pick = std::max(lo, 1); pick <= std::min(hi, total); ++pick) {
        const VertexSet nb = open_neighborhood(inst.g, found[pick - 1]);
        if (nb.empty()) {
          rejected = true;
          continue;
        }
        if (tc.on())
          tc.emit("branch", "rule2",
                  {{"component", i + 1}, {"clique", clique}, {"preceding", before}, {"position", pick}, {"vertex", nb.front()}});
        if (emitted.insert(nb.front()).second) out.results.push_back(detail::singleton(nb.front()));
      }
    }
  }
  if (out.results.empty() || rejected) out.results.push_back(Reject{"rule2_no_neighbour"});
  return out;
}

// G disconnected: every component of G loses a vertex, so guess which components of G' land in the first one.
inline std::optional<Branches> rule_disconnected_g(const CleaningInstance& inst) {
  const int k = inst.k();
  const auto cg = detail::components_by_min(inst.g);
  if (cg.size() < 2) return std::nullopt;
  Branches out;
  if (static_cast<int>(cg.size()) > k) {
    out.results.push_back(Reject{"too_many_components"});
    return out;
  }
  const VertexSet& first = cg.front();
  const auto cp = detail::components_by_min(inst.gprime);
  const std::size_t c = cp.size();
  if (c >= 8 * sizeof(unsigned long long)) throw std::logic_error("too many components to enumerate");
  for (unsigned long long mask = 0; mask < (1ULL << c); ++mask) {
    VertexSet chosen;
    for (std::size_t t = 0; t < c; ++t)
      if (mask >> t & 1ULL) chosen.insert(chosen.end(), cp[t].begin(), cp[t].end());
    const int param = static_cast<int>(first.size()) - static_cast<int>(chosen.size());
    if (param < 1 || param > k - 1) continue;
    normalize(chosen);
    out.results.push_back(IndependentSubproblem{make_sub(inst.gprime, chosen, inst.g, first)});
  }
  if (out.results.empty()) out.results.push_back(Reject{"no_component_split"});
  return out;
}

// Universal vertex in G: matched with one of G' if there is one, otherwise it must go.
inline std::optional<AOutcome> rule_universal_g(const CleaningInstance& inst) {
  const auto ug = universal_vertices(inst.g);
  if (ug.empty()) return std::nullopt;
  const auto up = universal_vertices(inst.gprime);
  if (up.empty()) return AOutcome{Branches{{detail::singleton(ug.front())}}};
  return AOutcome{ReducedInput{make_sub(inst.gprime, set_difference(all_vertices(inst.gprime), {up.front()}), inst.g,
                                        set_difference(all_vertices(inst.g), {ug.front()}))}};
}

// G connected, G' not: some edge leaving a prefix of the right-end order has to be cut.
inline std::optional<Branches> rule_disconnected_gprime(const CleaningInstance& inst) {
  const auto cp = detail::components_by_min(inst.gprime);
  if (cp.size() < 2) return std::nullopt;
  const int k = inst.k();
  const int n = inst.g.size();
  const VertexSet order = detail::by_right_end(inst.g);
  Branches out;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& q : cp) {
    for (int s = static_cast<int>(q.size()); s <= static_cast<int>(q.size()) + k; ++s) {
      if (s >= n) break;
      std::vector<char> in(n, 0);
      for (int t = 0; t < s; ++t) in[order[t]] = 1;
      std::optional<std::pair<VertexId, VertexId>> edge;
      for (int t = 0; t < s && !edge; ++t)
        for (VertexId y : inst.g.neighbors(order[t]))
          if (!in[y]) {
            edge = std::pair(order[t], y);
            break;
          }
      if (!edge) continue;
      auto e = *edge;
      if (e.first > e.second) std::swap(e.first, e.second);
      if (seen.insert(e).second) out.results.push_back(NecessarySet{{e.first, e.second}});
    }
  }
  if (out.results.empty()) out.results.push_back(Reject{"no_crossing_edge"});
  return out;
}

// G' has a universal vertex and G has none: the leftmost-ending and rightmost-starting vertices cannot both stay.
inline std::optional<Branches> rule_universal_gprime(const CleaningInstance& inst) {
  if (universal_vertices(inst.gprime).empty()) return std::nullopt;
  const auto& g = inst.g;
  VertexId a = 0, b = 0;
  for (VertexId v = 1; v < g.size(); ++v) {
    if (g.interval(v).right < g.interval(a).right) a = v;
    if (g.interval(v).left > g.interval(b).left) b = v;
  }
  VertexSet s{a, b};
  normalize(s);
  return Branches{{NecessarySet{s}}};
}

}  // namespace icl
