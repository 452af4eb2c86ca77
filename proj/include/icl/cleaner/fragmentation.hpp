#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "root_view.hpp"

namespace icl {

// Source block [sa,sb] of the smaller root mapped into target block [ta,tb] of the larger one.
struct Fragment {
  int sa = 0, sb = 0, ta = 0, tb = 0;
  int delta() const { return ta - sa; }
  int sigma() const { return (tb - ta) - (sb - sa); }
  bool trivial() const { return sigma() == 0; }
  bool operator==(const Fragment&) const = default;
};

struct AnnotatedFragmentation {
  int mp = 0, m = 0;
  std::vector<Fragment> frags;
  std::vector<char> U, W;  // indexed 1..mp
  std::vector<int> owner;  // index -> fragment position

  static AnnotatedFragmentation initial(int mp, int m) {
    AnnotatedFragmentation af;
    af.mp = mp;
    af.m = m;
    af.frags.push_back({1, mp, 1, m});
    af.U.assign(mp + 1, 0);
    af.W.assign(mp + 1, 0);
    af.reindex();
    return af;
  }

  void reindex() {
    owner.assign(mp + 1, -1);
    for (std::size_t h = 0; h < frags.size(); ++h)
      for (int j = frags[h].sa; j <= frags[h].sb; ++j) owner[j] = static_cast<int>(h);
  }

  const Fragment& frag(int j) const { return frags[owner[j]]; }
  int left(int j) const { return j + frag(j).delta(); }
  int right(int j) const { return j + frag(j).delta() + frag(j).sigma(); }
  bool trivial(int j) const { return frag(j).trivial(); }
  bool in_z(int j) const { return !trivial(j) && frag(j).sb == j; }

  int nontrivial_count() const {
    int c = 0;
    for (const auto& f : frags) c += f.trivial() ? 0 : 1;
    return c;
  }

  AnnotatedFragmentation reversed() const {
    AnnotatedFragmentation r;
    r.mp = mp;
    r.m = m;
    for (auto it = frags.rbegin(); it != frags.rend(); ++it)
      r.frags.push_back({mp - it->sb + 1, mp - it->sa + 1, m - it->tb + 1, m - it->ta + 1});
    r.U.assign(mp + 1, 0);
    r.W.assign(mp + 1, 0);
    for (int j = 1; j <= mp; ++j) {
      r.U[mp - j + 1] = U[j];
      r.W[mp - j + 1] = W[j];
    }
    r.reindex();
    return r;
  }

  // Split the fragment holding j so that j starts a fragment aligned to its right end.
  void right_split(int j) {
    const int h = owner[j];
    const Fragment f = frags[h];
    if (j <= f.sa) throw std::logic_error("right split at the first index of a fragment");
    const int rj = right(j);
    frags[h] = {f.sa, j - 1, f.ta, rj - 1};
    frags.insert(frags.begin() + h + 1, Fragment{j, f.sb, rj, f.tb});
    reindex();
    drop_trivial_w();
  }

  // Split so that j starts a fragment at target index i, strictly inside its window.
  void skew_split(int j, int i) {
    const int h = owner[j];
    const Fragment f = frags[h];
    frags[h] = {f.sa, j - 1, f.ta, i - 1};
    frags.insert(frags.begin() + h + 1, Fragment{j, f.sb, i, f.tb});
    reindex();
    drop_trivial_w();
  }

  void mark_trivial_important() {
    for (int j = 1; j <= mp; ++j) U[j] = trivial(j) ? 1 : 0;
  }

  void drop_trivial_w() {
    for (int j = 1; j <= mp; ++j)
      if (W[j] && trivial(j)) W[j] = 0;
  }

  bool valid() const {
    if (frags.empty() || frags.front().sa != 1 || frags.front().ta != 1) return false;
    if (frags.back().sb != mp || frags.back().tb != m) return false;
    for (std::size_t h = 0; h < frags.size(); ++h) {
      const auto& f = frags[h];
      if (f.sb < f.sa || f.tb < f.ta || f.sigma() < 0 || f.delta() < 0) return false;
      if (h > 0) {
        const auto& p = frags[h - 1];
        if (f.sa != p.sb + 1 || f.ta != p.tb + 1 || f.delta() != p.delta() + p.sigma()) return false;
      }
    }
    for (int j = 1; j <= mp; ++j) {
      if (U[j] && !trivial(j)) return false;
      if (W[j] && !in_z(j)) return false;
    }
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json fr = nlohmann::json::array();
    for (const auto& f : frags) fr.push_back({{"source", {f.sa, f.sb}}, {"target", {f.ta, f.tb}}, {"sigma", f.sigma()}});
    nlohmann::json u = nlohmann::json::array(), w = nlohmann::json::array();
    for (int j = 1; j <= mp; ++j) {
      if (U[j]) u.push_back(j);
      if (W[j]) w.push_back(j);
    }
    return {{"fragments", fr}, {"important", u}, {"right_constrained", w}, {"nontrivial", nontrivial_count()}};
  }
};

// Evaluates the ten alignment properties for one orientation of (G', G, fragmentation).
class PropertyEval {
 public:
  enum Cls : char { kNone = 0, kL = 1, kR = 2, kX = 3 };

  struct PairInfo {
    int f = -1, h = -1;  // fragment positions, f before h
    std::vector<VertexId> lv, rv, xv;
    int lmax = 0, rmin = 0;
    int l_crit = 0, r_crit = 0, lr_crit = 0;
    std::map<int, int> j1, j2;  // start index -> first end index over R (j1) or L (j2)
  };

  PropertyEval(const RootView& g, const RootView& gp, const AnnotatedFragmentation& af, int k)
      : g_(g), gp_(gp), af_(af), k_(k) {
    classify();
  }

  const RootView& g() const { return g_; }
  const RootView& gp() const { return gp_; }
  const AnnotatedFragmentation& af() const { return af_; }
  const std::vector<PairInfo>& pairs() const { return pairs_; }
  Cls cls(VertexId v) const { return cls_[v]; }

  bool holds(int ell, int j) const {
    const bool nt = !af_.trivial(j);
    const int lj = af_.left(j);
    switch (ell) {
      case 1:
        return gp_.xcode[j] == g_.xcode[lj];
      case 2: {
        const int p = static_cast<int>(gp_.mplus[j].size()), q = static_cast<int>(g_.mplus[lj].size());
        const int pm = static_cast<int>(gp_.mminus[j].size()), qm = static_cast<int>(g_.mminus[lj].size());
        return p <= q && q <= p + k_ && pm <= qm && qm <= pm + k_;
      }
      case 3:
        return !nt || (gp_.mplus[j].size() == g_.mplus[lj].size() && gp_.mminus[j].size() == g_.mminus[lj].size());
      case 4:
        return !nt || !p4_witness(j);
      case 5:
        return !nt || pair_check(j, false);
      case 6:
        return !nt || !p6_witness(j);
      case 7:
        return !conflict_for(j);
      case 8:
        return !lr_critical_for(j);
      case 9:
        return !nt || pair_check(j, true);
      case 10:
        return !nt || !p10_witness(j);
      default:
        throw std::logic_error("property index out of range");
    }
  }

  int first_violation(int ell) const {
    for (int j = 1; j <= af_.mp; ++j)
      if (!holds(ell, j)) return j;
    return 0;
  }

  // Property 4: first y in j's fragment, before j, whose label counts disagree.
  std::optional<int> p4_witness(int j) const {
    for (int y = af_.frag(j).sa; y < j; ++y)
      if (gp_.Lcount(y, j) != g_.Lcount(af_.left(y), af_.left(j))) return y;
    return std::nullopt;
  }

  // Property 6: start index of an X-class vertex ending at j.
  std::optional<int> p6_witness(int j) const {
    std::optional<int> best;
    for (VertexId v : gp_.mminus[j])
      if (cls_[v] == kX && (!best || gp_.lo[v] < *best)) best = gp_.lo[v];
    return best;
  }

  // Property 10: first important index whose label counts with j disagree.
  std::optional<int> p10_witness(int j) const {
    for (int u = 1; u <= af_.mp; ++u) {
      if (!af_.U[u] || u == j) continue;
      const int a = std::min(u, j), b = std::max(u, j);
      if (gp_.Lcount(a, b) != g_.Lcount(af_.left(a), af_.left(b))) return u;
    }
    return std::nullopt;
  }

  // Property 7: first conflicting pair (y1,y2) that makes j conflict-inducing.
  std::optional<std::pair<int, int>> conflict_for(int j) const {
    for (const auto& p : pairs_) {
      if (af_.owner[j] != p.h) continue;
      for (const auto& [y1, e1] : p.j1)
        for (const auto& [y2, e2] : p.j2)
          if (y1 <= y2 && j >= std::max(e1, e2)) return std::pair(y1, y2);
    }
    return std::nullopt;
  }

  // Property 8: the pair for which j is LR-critical.
  const PairInfo* lr_critical_for(int j) const {
    for (const auto& p : pairs_)
      if (p.lr_crit == j) return &p;
    return nullptr;
  }

  // pi for one fragment and property.
  bool fragment_satisfies(int h, int ell) const {
    const auto& f = af_.frags[h];
    for (int j = f.sa; j <= f.sb; ++j)
      if (!holds(ell, j)) return false;
    return true;
  }

 private:
  // Rank pairing of M'^±(j) with M^±(left j); checks Properties 5 (window) or 9 (exact).
  bool pair_check(int j, bool exact) const {
    const int lj = af_.left(j);
    auto check = [&](const VertexSet& mine, const VertexSet& theirs, bool plus) {
      const std::size_t n = std::min(mine.size(), theirs.size());
      for (std::size_t t = 0; t < n; ++t) {
        const VertexId v = mine[t], w = theirs[t];
        const int y = plus ? gp_.hi[v] : gp_.lo[v];
        if (af_.trivial(y)) continue;
        const int q = plus ? g_.hi[w] : g_.lo[w];
        if (exact ? q != af_.left(y) : (q < af_.left(y) || q > af_.right(y))) return false;
      }
      return true;
    };
    return check(gp_.mplus[j], g_.mplus[lj], true) && check(gp_.mminus[j], g_.mminus[lj], false);
  }

  void classify() {
    cls_.assign(gp_.lo.size(), kNone);
    std::map<std::pair<int, int>, PairInfo> acc;
    for (VertexId v : gp_.roots) {
      const int y = gp_.lo[v], j = gp_.hi[v];
      const int f = af_.owner[y], h = af_.owner[j];
      if (f == h || af_.frags[f].trivial() || af_.frags[h].trivial()) continue;
      const auto& mm = gp_.mminus[j];
      const auto rank = static_cast<std::size_t>(std::find(mm.begin(), mm.end(), v) - mm.begin());
      const auto& other = g_.mminus[af_.left(j)];
      if (rank >= other.size()) continue;
      const int q = g_.lo[other[rank]];
      const int ly = af_.left(y), ry = af_.right(y);
      if (q < ly || q > ry) continue;
      auto& p = acc[{f, h}];
      p.f = f;
      p.h = h;
      if (q == ly) {
        cls_[v] = kL;
        p.lv.push_back(v);
      } else if (q == ry) {
        cls_[v] = kR;
        p.rv.push_back(v);
      } else {
        cls_[v] = kX;
        p.xv.push_back(v);
      }
    }
    for (auto& [key, p] : acc) {
      auto first_end = [&](const std::vector<VertexId>& vs, std::map<int, int>& out) {
        for (VertexId v : vs) {
          auto [it, fresh] = out.emplace(gp_.lo[v], gp_.hi[v]);
          if (!fresh) it->second = std::min(it->second, gp_.hi[v]);
        }
      };
      first_end(p.rv, p.j1);
      first_end(p.lv, p.j2);
      if (!p.j2.empty()) {
        p.lmax = p.j2.rbegin()->first;
        p.l_crit = p.j2.rbegin()->second;
      }
      if (!p.j1.empty()) {
        p.rmin = p.j1.begin()->first;
        p.r_crit = p.j1.begin()->second;
        p.lr_crit = p.lv.empty() ? p.r_crit : std::max(p.l_crit, p.r_crit);
      }
      pairs_.push_back(std::move(p));
    }
  }

  const RootView& g_;
  const RootView& gp_;
  const AnnotatedFragmentation& af_;
  int k_;
  std::vector<Cls> cls_;
  std::vector<PairInfo> pairs_;
};

// Number of (non-trivial fragment, property 1..9) pairs fully satisfied, summed over both orientations.
inline int fragmentation_measure(const RootView& g, const RootView& gp, const RootView& g_rev, const RootView& gp_rev,
                                 const AnnotatedFragmentation& af, int k) {
  int mu = 0;
  const AnnotatedFragmentation rev = af.reversed();
  for (int side = 0; side < 2; ++side) {
    const auto& a = side == 0 ? af : rev;
    PropertyEval ev(side == 0 ? g : g_rev, side == 0 ? gp : gp_rev, a, k);
    for (std::size_t h = 0; h < a.frags.size(); ++h) {
      if (a.frags[h].trivial()) continue;
      for (int ell = 1; ell <= 9; ++ell) mu += ev.fragment_satisfies(static_cast<int>(h), ell) ? 1 : 0;
    }
  }
  return mu;
}

}  // namespace icl
