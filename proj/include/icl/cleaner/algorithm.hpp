#pragma once

#include <future>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "../instance.hpp"
#include "../pqtree.hpp"
#include "outcome.hpp"
#include "qq.hpp"
#include "root_view.hpp"
#include "rules.hpp"
#include "trace.hpp"

namespace icl {

struct CleanOptions {
  Trace* trace = nullptr;
  int jobs = 1;
};

namespace detail {

inline Branches traced(Branches b, const std::string& rule, int k, const TraceContext& tc) {
  if (tc.on())
    for (const auto& r : b.results) tc.emit("outcome", rule, describe_result(r, k));
  return b;
}

inline AOutcome traced_reduce(ReducedInput r, const std::string& rule, const TraceContext& tc) {
  if (tc.on())
    tc.emit("reduced", rule,
            {{"gprime", r.sub.instance.gprime.size()}, {"g", r.sub.instance.g.size()}, {"k", r.sub.instance.k()}});
  return r;
}

}  // namespace detail

// One step of the branching algorithm: a smaller equivalent instance, or a list of branch outputs.
inline AOutcome algorithm_a(const CleaningInstance& input, const TraceContext& tc = {}) {
  if (input.k() < 1) throw std::invalid_argument("algorithm_a needs k >= 1");
  CleaningInstance inst{ensure_model(input.gprime), ensure_model(input.g)};
  if (inst.gprime.size() == 0) {
    return detail::traced(Branches{{DirectSolution{Solution{all_vertices(inst.g)}}}}, "empty", inst.k(), tc);
  }
  if (auto r = rule_isomorphic_components(inst)) return detail::traced_reduce(std::move(*r), "rule1", tc);
  if (auto b = rule_many_components(inst, tc)) return detail::traced(std::move(*b), "rule2", inst.k(), tc);
  if (auto b = rule_disconnected_g(inst)) return detail::traced(std::move(*b), "rule3", inst.k(), tc);
  if (auto o = rule_universal_g(inst)) {
    if (auto* r = std::get_if<ReducedInput>(&*o)) return detail::traced_reduce(std::move(*r), "rule4", tc);
    return detail::traced(std::get<Branches>(std::move(*o)), "rule4", inst.k(), tc);
  }
  if (auto b = rule_disconnected_gprime(inst)) return detail::traced(std::move(*b), "rule5", inst.k(), tc);
  if (auto b = rule_universal_gprime(inst)) return detail::traced(std::move(*b), "rule6", inst.k(), tc);

  const LabeledPQTree lg = labeled_tree(inst.g);
  const LabeledPQTree lp = labeled_tree(inst.gprime);
  const RootView g = make_root_view(inst.g, lg);
  const RootView gp = make_root_view(inst.gprime, lp);
  if (auto r = qq_check_reduced(inst, g, gp)) return detail::traced_reduce(std::move(*r), "qq_reduce", tc);
  return qq_case(inst, g, gp, tc);
}

// Vertices s such that the instance is solvable iff deleting some s keeps it solvable.
struct NecessaryResult {
  VertexSet vertices;
  std::optional<Solution> solution;  // a full solution, when one turned up on the reduction chain
};

namespace detail {

inline VertexSet lift(const VertexSet& s, const std::vector<VertexId>& origin) {
  VertexSet out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(origin[v]);
  normalize(out);
  return out;
}

inline NecessaryResult necessary_search(const CleaningInstance& inst, const TraceContext& tc) {
  CleaningInstance cur = inst;
  std::vector<VertexId> origin = all_vertices(inst.g);
  NecessaryResult res;
  for (int round = 0;; ++round) {
    const TraceContext here = tc.child("r" + std::to_string(round));
    AOutcome out = algorithm_a(cur, here);
    if (auto* red = std::get_if<ReducedInput>(&out)) {
      std::vector<VertexId> next(red->sub.origin.size());
      for (std::size_t i = 0; i < next.size(); ++i) next[i] = origin[red->sub.origin[i]];
      origin = std::move(next);
      cur = std::move(red->sub.instance);
      continue;
    }
    int idx = 0;
    for (auto& br : std::get<Branches>(out).results) {
      const TraceContext at = here.child("b" + std::to_string(idx++));
      if (auto* ns = std::get_if<NecessarySet>(&br)) {
        res.vertices = set_union(res.vertices, lift(ns->vertices, origin));
      } else if (auto* sp = std::get_if<IndependentSubproblem>(&br)) {
        const NecessaryResult inner = necessary_search(sp->sub.instance, at);
        VertexSet got = inner.vertices;
        if (inner.solution) got = set_union(got, inner.solution->deleted);
        res.vertices = set_union(res.vertices, lift(lift(got, sp->sub.origin), origin));
      } else if (auto* ds = std::get_if<DirectSolution>(&br)) {
        res.solution = Solution{lift(ds->solution.deleted, origin)};
        return res;
      }
    }
    return res;
  }
}

}  // namespace detail

inline VertexSet necessary_set(const CleaningInstance& inst, const CleanOptions& opts = {}) {
  if (inst.k() < 1) throw std::invalid_argument("necessary_set needs k >= 1");
  auto r = detail::necessary_search(inst, TraceContext{opts.trace, 0, ""});
  if (r.solution) return set_union(r.vertices, r.solution->deleted);
  return r.vertices;
}

namespace detail {

class CleaningSearch {
 public:
  CleaningSearch(const CleaningInstance& inst, const CleanOptions& opts) : root_(inst), opts_(opts) {}

  std::optional<Solution> run() {
    const int k = root_.k();
    if (k < 0) return std::nullopt;
    if (k == 0) {
      if (are_isomorphic(root_.gprime, root_.g)) return Solution{};
      return std::nullopt;
    }
    const TraceContext tc{opts_.trace, 0, ""};
    const NecessaryResult first = necessary_search(root_, tc.child("root"));
    if (first.solution) return checked(first.solution->deleted);
    const VertexSet& cand = first.vertices;
    const int jobs = std::max(1, opts_.jobs);
    for (std::size_t base = 0; base < cand.size(); base += static_cast<std::size_t>(jobs)) {
      const std::size_t end = std::min(cand.size(), base + static_cast<std::size_t>(jobs));
      std::vector<std::optional<VertexSet>> found(end - base);
      if (jobs == 1) {
        found[0] = descend({cand[base]}, tc.child("s" + std::to_string(cand[base])));
      } else {
        std::vector<std::future<std::optional<VertexSet>>> fut;
        for (std::size_t t = base; t < end; ++t)
          fut.push_back(std::async(std::launch::async, [this, &cand, t, &tc] {
            return descend({cand[t]}, tc.child("s" + std::to_string(cand[t])));
          }));
        for (std::size_t t = 0; t < fut.size(); ++t) found[t] = fut[t].get();
      }
      for (auto& f : found)
        if (f) return checked(*f);
    }
    return std::nullopt;
  }

 private:
  std::optional<Solution> checked(VertexSet s) const {
    normalize(s);
    if (static_cast<int>(s.size()) != root_.k() || !are_isomorphic(delete_vertices(root_.g, s), root_.gprime))
      throw std::logic_error("cleaning produced an invalid deletion set");
    return Solution{s};
  }

  bool known_bad(const VertexSet& s) {
    std::lock_guard<std::mutex> lock(mu_);
    return failed_.count(s) > 0;
  }

  void mark_bad(const VertexSet& s) {
    std::lock_guard<std::mutex> lock(mu_);
    failed_.insert(s);
  }

  // deleted: original ids removed so far, sorted
  std::optional<VertexSet> descend(VertexSet deleted, const TraceContext& tc) {
    normalize(deleted);
    if (known_bad(deleted)) return std::nullopt;
    const VertexSet keep = set_difference(all_vertices(root_.g), deleted);
    CleaningInstance cur{root_.gprime, induced_subgraph(root_.g, keep)};
    if (cur.k() == 0) {
      if (are_isomorphic(cur.gprime, cur.g)) return deleted;
      mark_bad(deleted);
      return std::nullopt;
    }
    const NecessaryResult nr = necessary_search(cur, tc);
    if (nr.solution) return set_union(deleted, lift(nr.solution->deleted, keep));
    for (VertexId s : nr.vertices) {
      VertexSet next = deleted;
      next.push_back(keep[s]);
      if (auto r = descend(next, tc.child("s" + std::to_string(keep[s])))) return r;
    }
    mark_bad(deleted);
    return std::nullopt;
  }

  CleaningInstance root_;
  CleanOptions opts_;
  std::mutex mu_;
  std::set<VertexSet> failed_;
};

}  // namespace detail

// Delete exactly |V(G)| - |V(G')| vertices of G to obtain G'; returns the deleted set when possible.
inline std::optional<Solution> interval_cleaning(const CleaningInstance& inst, const CleanOptions& opts = {}) {
  CleaningInstance checked{ensure_model(inst.gprime), ensure_model(inst.g)};
  return detail::CleaningSearch(checked, opts).run();
}

}  // namespace icl
