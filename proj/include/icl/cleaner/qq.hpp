#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "fragmentation.hpp"
#include "outcome.hpp"
#include "root_view.hpp"
#include "trace.hpp"

namespace icl {

inline Trace::json describe_result(const BranchResult& r, int k) {
  Trace::json j = std::visit(
      [](const auto& x) -> Trace::json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NecessarySet>)
          return {{"kind", "necessary_set"}, {"size", x.vertices.size()}, {"vertices", x.vertices}};
        else if constexpr (std::is_same_v<T, IndependentSubproblem>)
          return {{"kind", "subproblem"}, {"param", x.sub.instance.k()}};
        else if constexpr (std::is_same_v<T, DirectSolution>)
          return {{"kind", "solution"}, {"size", x.solution.deleted.size()}};
        else
          return {{"kind", "reject"}, {"reason", x.reason}};
      },
      r);
  j["k"] = k;
  return j;
}

// Candidate block [alpha,beta] for where index j of the smaller root lands.
struct BlockGuess {
  int j = 0;
  int alpha = 0, beta = 0;
};

inline std::vector<BlockGuess> branch_on_block(int j, const AnnotatedFragmentation& af, const RootView& g,
                                               const RootView& gp, int k) {
  std::vector<BlockGuess> out;
  const int lj = af.left(j), rj = af.right(j);
  const int pre = gp.wl[j], suf = gp.wr[j];
  for (int a = lj; a <= rj; ++a) {
    if (g.wr[a] < suf || g.wr[a] > suf + k) continue;
    for (int b = a; b <= rj; ++b) {
      if (g.wl[b] < pre || g.wl[b] > pre + k) continue;
      out.push_back({j, a, b});
    }
  }
  return out;
}

namespace detail {

inline bool same_labels(const RootView& a, const RootView& b) {
  if (a.L.size() != b.L.size()) return false;
  for (const auto& [blk, vs] : a.L)
    if (b.Lcount(blk.first, blk.second) != static_cast<int>(vs.size())) return false;
  return true;
}

inline std::vector<int> mismatched_children(const RootView& g, const RootView& gp) {
  std::vector<int> out;
  for (int i = 1; i <= g.m; ++i)
    if (g.xcode[i] != gp.xcode[i]) out.push_back(i);
  return out;
}

inline BranchResult first_of(const VertexSet& s, const std::string& reason) {
  if (s.empty()) return Reject{reason};
  return NecessarySet{{*std::min_element(s.begin(), s.end())}};
}

inline BranchResult subproblem_or_reject(const CleaningInstance& inst, const VertexSet& xp, const VertexSet& xg,
                                         const std::string& reason) {
  const int param = static_cast<int>(xg.size()) - static_cast<int>(xp.size());
  if (param < 1 || param > inst.k() - 1) return Reject{reason};
  VertexSet a = xp, b = xg;
  normalize(a);
  normalize(b);
  return IndependentSubproblem{make_sub(inst.gprime, a, inst.g, b)};
}

}  // namespace detail

// Equal child counts and labels, exactly one child pair differing: recurse into that pair alone.
inline std::optional<ReducedInput> qq_check_reduced(const CleaningInstance& inst, const RootView& g, const RootView& gp) {
  if (g.m != gp.m) return std::nullopt;
  for (int side = 0; side < 2; ++side) {
    const RootView o = side == 0 ? gp : gp.reversed();
    if (!detail::same_labels(g, o)) continue;
    const auto bad = detail::mismatched_children(g, o);
    if (bad.size() != 1) continue;
    VertexSet a = o.X[bad[0]], b = g.X[bad[0]];
    normalize(a);
    normalize(b);
    return ReducedInput{make_sub(inst.gprime, a, inst.g, b)};
  }
  return std::nullopt;
}

// Depth-first exploration of fragmentations for one orientation of the smaller root.
class FragmentationSearch {
 public:
  FragmentationSearch(const CleaningInstance& inst, const RootView& g, const RootView& gp, TraceContext tc)
      : inst_(inst), k_(inst.k()), g_(g), gr_(g.reversed()), gp_(gp), gpr_(gp.reversed()), tc_(std::move(tc)) {}

  std::vector<BranchResult> run() {
    out_.clear();
    explore(AnnotatedFragmentation::initial(gp_.m, g_.m), tc_);
    return std::move(out_);
  }

  int measure(const AnnotatedFragmentation& af) const { return fragmentation_measure(g_, gp_, gr_, gpr_, af, k_); }

 private:
  struct Escalate {
    int y = 0;
    bool exact_wide = false;
  };
  using LeftResult = std::variant<BranchResult, Escalate>;
  using TypeResult = std::variant<BranchResult, AnnotatedFragmentation>;

  void push(BranchResult r, const TraceContext& tc) {
    if (tc.on()) tc.emit("outcome", "qq", describe_result(r, k_));
    out_.push_back(std::move(r));
  }

  void explore(const AnnotatedFragmentation& af, const TraceContext& tc) {
    const int nt = af.nontrivial_count();
    if (tc.on()) tc.emit("frag_state", "qq", {{"state", af.to_json()}, {"mu", measure(af)}, {"k", k_}});
    if (nt > 2 * k_) {
      push(Reject{"too_many_fragments"}, tc);
      return;
    }
    const AnnotatedFragmentation rev = af.reversed();
    const PropertyEval ev0(g_, gp_, af, k_);
    const PropertyEval ev1(gr_, gpr_, rev, k_);
    int ell = 0, j = 0;
    bool flipped = false;
    for (int l = 1; l <= 10 && ell == 0; ++l) {
      if (int v = ev0.first_violation(l)) {
        ell = l;
        j = v;
      } else if (l <= 9) {
        if (int w = ev1.first_violation(l)) {
          ell = l;
          j = w;
          flipped = true;
        }
      }
    }
    if (ell == 0) {
      finish(af, tc);
      return;
    }
    const PropertyEval& ev = flipped ? ev1 : ev0;
    const AnnotatedFragmentation& afo = flipped ? rev : af;
    const auto guesses = branch_on_block(j, afo, ev.g(), ev.gp(), k_);
    if (tc.on())
      tc.emit("branch", "qq",
              {{"property", ell}, {"index", j}, {"reversed", flipped}, {"guesses", guesses.size()}});
    if (guesses.empty()) {
      push(Reject{"no_block_guess"}, tc);
      return;
    }
    int mu_before = tc.on() ? measure(af) : 0;
    int step = 0;
    auto handle_type = [&](const BlockGuess& gs, const TraceContext& ctc) {
      TypeResult tr = classify_non_left(ev, gs, ell);
      if (auto* r = std::get_if<BranchResult>(&tr)) {
        push(std::move(*r), ctc);
        return;
      }
      AnnotatedFragmentation next = std::get<AnnotatedFragmentation>(tr);
      if (flipped) next = next.reversed();
      if (ctc.on())
        ctc.emit(gs.alpha == afo.right(gs.j) ? "right_split" : "skew_split", "qq",
                 {{"ell", ell}, {"mu_before", mu_before}, {"mu_after", measure(next)}, {"source", "loop"},
                  {"nontrivial_before", nt}, {"k", k_}});
      explore(next, ctc);
    };
    for (const auto& gs : guesses) {
      const TraceContext ctc = tc.child("g" + std::to_string(step++)).deeper();
      const bool left_aligned = gs.alpha == afo.left(j) && gs.beta == gs.alpha;
      if (!left_aligned) {
        handle_type(gs, ctc);
        continue;
      }
      LeftResult lr = handle_left_aligned(ev, ell, j);
      if (auto* r = std::get_if<BranchResult>(&lr)) {
        push(std::move(*r), ctc);
        continue;
      }
      const Escalate esc = std::get<Escalate>(lr);
      const int ly = afo.left(esc.y), ry = afo.right(esc.y);
      int sub = 0;
      bool any = false;
      for (const auto& ys : branch_on_block(esc.y, afo, ev.g(), ev.gp(), k_)) {
        const bool wide = ys.alpha < ys.beta;
        const bool skew = ys.alpha == ys.beta && ly < ys.alpha && ys.alpha < ry;
        if (esc.exact_wide ? !(ys.alpha == ly && ys.beta == ry) : !(wide || skew)) continue;
        any = true;
        handle_type(ys, ctc.child("e" + std::to_string(sub++)));
      }
      if (!any) push(Reject{"no_escalation_guess"}, ctc);
    }
  }

  // Left-aligned index violating property ell.
  LeftResult handle_left_aligned(const PropertyEval& ev, int ell, int j) const {
    const RootView& g = ev.g();
    const RootView& gp = ev.gp();
    const AnnotatedFragmentation& af = ev.af();
    const int lj = af.left(j);
    switch (ell) {
      case 1:
        return detail::subproblem_or_reject(inst_, gp.X[j], g.X[lj], "child_param_out_of_range");
      case 2:
        return Reject{"boundary_count"};
      case 3: {
        const auto pp = gp.mplus[j].size(), pm = gp.mminus[j].size();
        const auto qp = g.mplus[lj].size(), qm = g.mminus[lj].size();
        if (qp < pp || qm < pm) return Reject{"boundary_shortfall"};
        if (static_cast<int>(pp) > k_ || static_cast<int>(pm) > k_) return Reject{"boundary_excess"};
        const VertexSet& src = qp > pp ? g.mplus[lj] : g.mminus[lj];
        const std::size_t take = (qp > pp ? pp : pm) + 1;
        VertexSet s(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(take));
        normalize(s);
        return NecessarySet{s};
      }
      case 4: {
        const int y = *ev.p4_witness(j);
        return label_gap(gp.Lcount(y, j), g.Lset(af.left(y), lj));
      }
      case 5:
        return Reject{"pair_outside_window"};
      case 6:
        return Escalate{*ev.p6_witness(j), false};
      case 7: {
        const auto [y1, y2] = *ev.conflict_for(j);
        if (y1 < y2) return Reject{"conflicting_pair"};
        return Escalate{y1, true};
      }
      case 8:
        return short_gap(ev, *ev.lr_critical_for(j));
      case 9:
        return Reject{"pair_misaligned"};
      case 10: {
        const int u = *ev.p10_witness(j);
        const int a = std::min(u, j), b = std::max(u, j);
        return label_gap(gp.Lcount(a, b), g.Lset(af.left(a), af.left(b)));
      }
      default:
        throw std::logic_error("property index out of range");
    }
  }

  static BranchResult label_gap(int have, const VertexSet& target) {
    if (have > static_cast<int>(target.size())) return Reject{"label_excess"};
    return detail::first_of(target, "label_gap_empty");
  }

  BranchResult short_gap(const PropertyEval& ev, const PropertyEval::PairInfo& p) const {
    const AnnotatedFragmentation& af = ev.af();
    const Fragment& f = af.frags[p.f];
    const int yr = p.rmin;
    int s1, s2;
    if (yr < f.sa + f.sigma()) {
      s1 = f.sa;
      s2 = yr;
    } else {
      if (p.lv.empty() || p.lmax >= yr) return Reject{"short_gap_no_left"};
      s1 = p.lmax;
      s2 = yr;
    }
    const VertexSet bp = ev.gp().bplus(s1, s2);
    const VertexSet bg = ev.g().bplus(af.left(s1), af.right(s2));
    if (bg.size() <= bp.size()) return Reject{"short_gap_count"};
    if (static_cast<int>(bp.size()) > 2 * k_) return Reject{"short_gap_too_large"};
    return NecessarySet{VertexSet(bg.begin(), bg.begin() + static_cast<std::ptrdiff_t>(bp.size() + 1))};
  }

  // Wide, right-aligned or skew guess.
  TypeResult classify_non_left(const PropertyEval& ev, const BlockGuess& gs, int ell) const {
    const RootView& g = ev.g();
    const AnnotatedFragmentation& af = ev.af();
    const int j = gs.j;
    if (gs.alpha < gs.beta) {
      for (VertexId z : g.roots) {
        const int z1 = g.lo[z], z2 = g.hi[z];
        VertexSet side;
        if (z1 < gs.alpha && gs.alpha <= z2 && z2 < gs.beta) {
          side = g.X[gs.beta];
          side.insert(side.end(), g.mplus[gs.beta].begin(), g.mplus[gs.beta].end());
        } else if (gs.alpha < z1 && z1 <= gs.beta && gs.beta < z2) {
          side = g.X[gs.alpha];
          side.insert(side.end(), g.mminus[gs.alpha].begin(), g.mminus[gs.alpha].end());
        } else {
          continue;
        }
        VertexSet s{z};
        if (!side.empty()) s.push_back(*std::min_element(side.begin(), side.end()));
        normalize(s);
        return BranchResult{NecessarySet{s}};
      }
      return BranchResult{Reject{"no_wide_witness"}};
    }
    const Fragment& f = af.frag(j);
    if (j == f.sa) {
      VertexSet s = g.X[f.ta];
      s.insert(s.end(), g.mplus[f.ta].begin(), g.mplus[f.ta].end());
      s.insert(s.end(), g.mminus[f.ta].begin(), g.mminus[f.ta].end());
      return BranchResult{detail::first_of(s, "extremal_empty")};
    }
    AnnotatedFragmentation next = af;
    if (gs.alpha == af.right(j)) {
      next.right_split(j);
      if (ell <= 9) next.mark_trivial_important();
    } else {
      next.skew_split(j, gs.alpha);
      next.mark_trivial_important();
    }
    return next;
  }

  // Saturate right alignments, then write down the isomorphism explicitly.
  void finish(AnnotatedFragmentation af, const TraceContext& tc) {
    const int mp = af.mp;
    for (bool changed = true; changed;) {
      changed = false;
      for (int a = 1; a <= mp && !changed; ++a) {
        for (int b = a + 1; b <= mp && !changed; ++b) {
          const int lp = gp_.Lcount(a, b);
          const bool ta = af.trivial(a), tb = af.trivial(b);
          auto split = [&](int at) {
            const int before = tc.on() ? measure(af) : 0;
            const int nt_before = af.nontrivial_count();
            af.right_split(at);
            if (tc.on())
              tc.emit("right_split", "saturation",
                      {{"ell", 0}, {"mu_before", before}, {"mu_after", measure(af)}, {"source", "saturation"},
                       {"nontrivial_before", nt_before}, {"k", k_}});
          };
          if (ta && !af.U[a] && !tb && !af.in_z(b) && lp > 0) {
            split(b + 1);
            changed = true;
          } else if (!ta && !af.W[a] && lp > 0 && ((tb && !af.U[b]) || af.W[b])) {
            af.W[a] = 1;
            if (!af.in_z(a)) split(a + 1);
            changed = true;
          } else if (af.U[a] && af.W[b]) {
            const VertexSet& t = g_.Lset(af.left(a), af.right(b));
            if (lp != static_cast<int>(t.size())) {
              push(label_gap(lp, t), tc);
              return;
            }
          } else if (ta && tb) {
            const VertexSet& t = g_.Lset(af.left(a), af.left(b));
            if (lp != static_cast<int>(t.size())) {
              push(label_gap(lp, t), tc);
              return;
            }
          }
        }
      }
    }
    if (tc.on()) tc.emit("saturated", "qq", {{"state", af.to_json()}});
    push(build_isomorphism(af), tc);
  }

  BranchResult build_isomorphism(const AnnotatedFragmentation& af) const {
    const IntervalGraph& gp = inst_.gprime;
    const IntervalGraph& g = inst_.g;
    std::vector<VertexId> phi(gp.size(), -1);
    std::vector<char> used(g.size(), 0);
    auto delta = [&](int j) { return af.W[j] ? af.right(j) : af.left(j); };
    bool ok = true;
    for (int j = 1; j <= af.mp && ok; ++j) {
      const VertexSet& xp = gp_.X[j];
      const VertexSet& xg = g_.X[delta(j)];
      if (xp.size() != xg.size()) {
        ok = false;
        break;
      }
      if (xp.empty()) continue;
      try {
        const auto iso = extract_isomorphism(induced_subgraph(gp, xp), induced_subgraph(g, xg));
        for (std::size_t t = 0; t < xp.size(); ++t) phi[xp[t]] = xg[iso[t]];
      } catch (const NotIsomorphic&) {
        ok = false;
      }
    }
    std::set<std::pair<int, int>> taken;
    for (const auto& [blk, vs] : gp_.L) {
      if (!ok) break;
      const int a = blk.first, b = blk.second;
      std::vector<std::pair<int, int>> options{{delta(a), delta(b)}};
      if (af.W[a]) options.emplace_back(af.left(a), delta(b));
      if (af.in_z(b)) options.emplace_back(delta(a), af.right(b));
      bool placed = false;
      for (const auto& o : options) {
        if (taken.count(o) || g_.Lcount(o.first, o.second) != static_cast<int>(vs.size())) continue;
        const VertexSet& t = g_.Lset(o.first, o.second);
        for (std::size_t q = 0; q < vs.size(); ++q) phi[vs[q]] = t[q];
        taken.insert(o);
        placed = true;
        break;
      }
      ok = placed;
    }
    if (ok) {
      for (VertexId v = 0; v < gp.size() && ok; ++v) {
        if (phi[v] < 0 || used[phi[v]]) ok = false;
        else used[phi[v]] = 1;
      }
    }
    if (!ok) return Reject{"build_failed"};
    VertexSet s;
    for (VertexId v = 0; v < g.size(); ++v)
      if (!used[v]) s.push_back(v);
    if (static_cast<int>(s.size()) != k_) return Reject{"build_failed"};
    if (!is_isomorphism(gp, delete_vertices(g, s), remap(phi, s, g.size())) &&
        !are_isomorphic(gp, delete_vertices(g, s)))
      return Reject{"build_failed"};
    return DirectSolution{Solution{s}};
  }

  // phi into g, re-expressed in the ids of g - s
  static std::vector<VertexId> remap(const std::vector<VertexId>& phi, const VertexSet& s, int n) {
    std::vector<VertexId> to(n, -1);
    std::vector<char> gone(n, 0);
    for (VertexId v : s) gone[v] = 1;
    int next = 0;
    for (VertexId v = 0; v < n; ++v)
      if (!gone[v]) to[v] = next++;
    std::vector<VertexId> out(phi.size());
    for (std::size_t v = 0; v < phi.size(); ++v) out[v] = to[phi[v]];
    return out;
  }

  const CleaningInstance& inst_;
  int k_;
  RootView g_, gr_, gp_, gpr_;
  TraceContext tc_;
  std::vector<BranchResult> out_;
};

// Both roots are Q-nodes and no single child pair explains the difference.
inline Branches qq_case(const CleaningInstance& inst, const RootView& g, const RootView& gp, const TraceContext& tc = {}) {
  Branches out;
  const int k = inst.k();
  auto add = [&](BranchResult r, const TraceContext& at) {
    if (at.on()) at.emit("outcome", "qq", describe_result(r, k));
    out.results.push_back(std::move(r));
  };
  {
    VertexSet s;
    if (!g.X[1].empty()) s.push_back(g.X[1].front());
    if (!g.X[g.m].empty()) s.push_back(g.X[g.m].front());
    normalize(s);
    if (s.empty()) add(Reject{"local_empty"}, tc.child("local"));
    else add(NecessarySet{s}, tc.child("local"));
  }
  for (int side = 0; side < 2; ++side) {
    const RootView o = side == 0 ? gp : gp.reversed();
    const TraceContext ctc = tc.child(side == 0 ? "forward" : "reversed");
    if (g.m < o.m) {
      add(Reject{"fewer_children"}, ctc);
      continue;
    }
    if (g.m == o.m) {
      std::set<std::pair<int, int>> blocks;
      for (const auto& [b, vs] : g.L) blocks.insert(b);
      for (const auto& [b, vs] : o.L) blocks.insert(b);
      bool short_fall = false;
      std::optional<std::pair<int, int>> surplus;
      for (const auto& b : blocks) {
        const int have = g.Lcount(b.first, b.second), need = o.Lcount(b.first, b.second);
        if (have < need) short_fall = true;
        else if (have > need && !surplus) surplus = b;
      }
      if (short_fall) add(Reject{"label_shortfall"}, ctc);
      else if (surplus) add(detail::first_of(g.Lset(surplus->first, surplus->second), "label_empty"), ctc);
      else {
        const auto bad = detail::mismatched_children(g, o);
        if (bad.empty()) add(Reject{"no_mismatch"}, ctc);
        else add(detail::subproblem_or_reject(inst, o.X[bad[0]], g.X[bad[0]], "child_param_out_of_range"), ctc);
      }
      continue;
    }
    if (ctc.on()) ctc.emit("fragmentation", "qq", {{"m", g.m}, {"m_prime", o.m}, {"k", k}});
    FragmentationSearch fs(inst, g, o, ctc);
    for (auto& r : fs.run()) out.results.push_back(std::move(r));
  }
  return out;
}

}  // namespace icl
