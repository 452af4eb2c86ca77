#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace icl {

struct NotIsomorphic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class NodeKind : int { Leaf = 0, P = 1, Q = 2 };

struct PQNode {
  NodeKind kind = NodeKind::Leaf;
  std::vector<int> children;
  int clique = -1;  // leaves only
};

struct PQTree {
  std::vector<PQNode> nodes;
  int root = -1;
  std::vector<VertexSet> cliques;

  bool empty() const { return root < 0; }

  std::vector<int> frontier() const {
    std::vector<int> out;
    if (root < 0) return out;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (nodes[x].kind == NodeKind::Leaf) {
        out.push_back(nodes[x].clique);
        continue;
      }
      for (auto it = nodes[x].children.rbegin(); it != nodes[x].children.rend(); ++it) stack.push_back(*it);
    }
    return out;
  }
};

namespace detail {

// Template reduction for the consecutive-ones property over leaf sets.
class Reducer {
 public:
  explicit Reducer(int leaves) : leaf_node_(leaves) {
    for (int c = 0; c < leaves; ++c) {
      leaf_node_[c] = static_cast<int>(nodes_.size());
      nodes_.push_back({NodeKind::Leaf, {}, c});
    }
    if (leaves == 1) {
      root_ = 0;
    } else if (leaves > 1) {
      root_ = make(NodeKind::P, std::vector<int>(leaf_node_));
    }
  }

  // False when no ordering keeps the set consecutive.
  bool reduce(const std::vector<int>& set) {
    const int total = static_cast<int>(leaf_node_.size());
    if (set.size() <= 1 || static_cast<int>(set.size()) >= total) return true;
    cnt_.assign(nodes_.size(), 0);
    size_.assign(nodes_.size(), 0);
    for (int c : set) cnt_[leaf_node_[c]] = 1;
    count(root_);
    need_ = static_cast<int>(set.size());
    int x = root_;
    for (bool moved = true; moved;) {
      moved = false;
      for (int c : nodes_[x].children)
        if (cnt_[c] == need_) {
          x = c;
          moved = true;
          break;
        }
    }
    return process_root(x);
  }

  PQTree finish(std::vector<VertexSet> cliques) const {
    PQTree t;
    t.cliques = std::move(cliques);
    if (root_ < 0) return t;
    std::function<int(int)> copy = [&](int x) {
      PQNode n{nodes_[x].kind, {}, nodes_[x].clique};
      for (int c : nodes_[x].children) n.children.push_back(copy(c));
      t.nodes.push_back(std::move(n));
      return static_cast<int>(t.nodes.size()) - 1;
    };
    t.root = copy(root_);
    return t;
  }

 private:
  enum Status { Empty, Partial, Full };

  int make(NodeKind k, std::vector<int> children) {
    nodes_.push_back({k, std::move(children), -1});
    cnt_.push_back(0);
    size_.push_back(0);
    return static_cast<int>(nodes_.size()) - 1;
  }

  void count(int x) {
    if (nodes_[x].kind == NodeKind::Leaf) {
      size_[x] = 1;
      return;
    }
    int c = 0, s = 0;
    for (int y : nodes_[x].children) {
      count(y);
      c += cnt_[y];
      s += size_[y];
    }
    cnt_[x] = c;
    size_[x] = s;
  }

  Status status(int x) const { return cnt_[x] == 0 ? Empty : (cnt_[x] == size_[x] ? Full : Partial); }

  int group(const std::vector<int>& members) {
    if (members.size() == 1) return members[0];
    int g = make(NodeKind::P, members);
    cnt_[g] = 0;
    for (int y : members) {
      cnt_[g] += cnt_[y];
      size_[g] += size_[y];
    }
    return g;
  }

  // Children of a partial node rearranged as empties then fulls.
  bool partial_seq(int x, std::vector<int>& out) {
    const auto& ch = nodes_[x].children;
    if (nodes_[x].kind == NodeKind::P) {
      std::vector<int> e, f, pa;
      for (int y : ch) (status(y) == Empty ? e : status(y) == Full ? f : pa).push_back(y);
      if (pa.size() > 1) return false;
      if (!e.empty()) out.push_back(group(e));
      if (!pa.empty() && !partial_seq(pa[0], out)) return false;
      if (!f.empty()) out.push_back(group(f));
      return true;
    }
    std::vector<int> seq = ch;
    if (!empty_then_full(seq)) {
      std::reverse(seq.begin(), seq.end());
      if (!empty_then_full(seq)) return false;
    }
    for (int y : seq) {
      if (status(y) == Partial) {
        if (!partial_seq(y, out)) return false;
      } else {
        out.push_back(y);
      }
    }
    return true;
  }

  // pattern Empty* Partial? Full*
  bool empty_then_full(const std::vector<int>& seq) const {
    bool past = false;
    for (int y : seq) {
      Status s = status(y);
      if (s != Full && past) return false;
      if (s != Empty) past = true;
    }
    return true;
  }

  bool process_root(int x) {
    if (status(x) == Full) return true;
    auto& node = nodes_[x];
    if (node.kind == NodeKind::P) {
      std::vector<int> e, f, pa;
      for (int y : node.children) (status(y) == Empty ? e : status(y) == Full ? f : pa).push_back(y);
      if (pa.size() > 2) return false;
      if (pa.empty()) {
        e.push_back(group(f));
        nodes_[x].children = e;
        return true;
      }
      std::vector<int> seq;
      if (!partial_seq(pa[0], seq)) return false;
      if (!f.empty()) seq.push_back(group(f));
      if (pa.size() == 2) {
        std::vector<int> tail;
        if (!partial_seq(pa[1], tail)) return false;
        seq.insert(seq.end(), tail.rbegin(), tail.rend());
      }
      if (e.empty()) {
        nodes_[x].kind = NodeKind::Q;
        nodes_[x].children = seq;
      } else {
        int q = make(NodeKind::Q, seq);
        e.push_back(q);
        nodes_[x].children = e;
      }
      return true;
    }
    // Q root: nonempty children contiguous with only full ones inside
    const std::vector<int> ch = node.children;
    int l = -1, r = -1;
    for (int i = 0; i < static_cast<int>(ch.size()); ++i)
      if (status(ch[i]) != Empty) {
        if (l < 0) l = i;
        r = i;
      }
    for (int i = l; i <= r; ++i) {
      if (status(ch[i]) == Empty) return false;
      if (status(ch[i]) == Partial && i != l && i != r) return false;
    }
    std::vector<int> out(ch.begin(), ch.begin() + l);
    if (status(ch[l]) == Partial) {
      if (!partial_seq(ch[l], out)) return false;
    } else {
      out.push_back(ch[l]);
    }
    for (int i = l + 1; i < r; ++i) out.push_back(ch[i]);
    if (status(ch[r]) == Partial) {
      std::vector<int> tail;
      if (!partial_seq(ch[r], tail)) return false;
      out.insert(out.end(), tail.rbegin(), tail.rend());
    } else {
      out.push_back(ch[r]);
    }
    out.insert(out.end(), ch.begin() + r + 1, ch.end());
    nodes_[x].children = out;
    return true;
  }

  std::vector<PQNode> nodes_;
  std::vector<int> leaf_node_;
  std::vector<int> cnt_, size_;
  int root_ = -1;
  int need_ = 0;
};

}  // namespace detail

// PQ-tree over leaf ids [0, leaves) admitting exactly the orders keeping every set consecutive.
inline PQTree pqtree_from_sets(int leaves, const std::vector<std::vector<int>>& sets, std::vector<VertexSet> cliques = {}) {
  detail::Reducer r(leaves);
  for (const auto& s : sets)
    if (!r.reduce(s)) throw NotInterval("no consecutive clique ordering exists");
  return r.finish(std::move(cliques));
}

inline PQTree build_pqtree(const IntervalGraph& g) {
  std::vector<VertexSet> cliques = g.has_model() ? model_cliques(g) : chordal_maximal_cliques(g);
  std::vector<std::vector<int>> member(g.size());
  for (int c = 0; c < static_cast<int>(cliques.size()); ++c)
    for (VertexId v : cliques[c]) member[v].push_back(c);
  const int nc = static_cast<int>(cliques.size());
  return pqtree_from_sets(nc, member, std::move(cliques));
}

// Cliques in a consecutive order; recognizes graphs given without a model.
inline std::vector<VertexSet> maximal_cliques_ordered(const IntervalGraph& g) {
  if (g.has_model()) return model_cliques(g);
  PQTree t = build_pqtree(g);
  std::vector<VertexSet> out;
  for (int c : t.frontier()) out.push_back(t.cliques[c]);
  return out;
}

// Returns g with a model, deriving one from a PQ-tree frontier when absent.
inline IntervalGraph ensure_model(const IntervalGraph& g) {
  if (g.has_model()) return g;
  auto cliques = maximal_cliques_ordered(g);
  std::vector<Interval> model(g.size(), Interval{-1, -1});
  for (int p = 0; p < static_cast<int>(cliques.size()); ++p)
    for (VertexId v : cliques[p]) {
      if (model[v].left < 0) model[v].left = p;
      model[v].right = p;
    }
  try {
    return g.with_model(std::move(model));
  } catch (const GraphError&) {
    throw NotInterval("clique ordering does not yield a model");
  }
}

struct LabeledPQTree {
  PQTree tree;
  int n = 0;                 // vertex count
  std::vector<int> parent;   // -1 at root
  std::vector<int> pos;      // 1-based position among siblings
  std::vector<int> charnode;
  std::vector<std::pair<int, int>> block;  // valid when charnode is a Q-node
  std::vector<VertexSet> rinv;

  const PQNode& node(int x) const { return tree.nodes[x]; }
  int arity(int x) const { return static_cast<int>(tree.nodes[x].children.size()); }
  bool is_q(int x) const { return tree.nodes[x].kind == NodeKind::Q; }

  // R^{-1} of every node in the subtree at x
  VertexSet subtree_vertices(int x) const {
    VertexSet out;
    std::vector<int> stack{x};
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      out.insert(out.end(), rinv[y].begin(), rinv[y].end());
      for (int c : tree.nodes[y].children) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::map<std::pair<int, int>, VertexSet> labels(int q) const {
    std::map<std::pair<int, int>, VertexSet> out;
    for (VertexId v : rinv[q]) out[block[v]].push_back(v);
    return out;
  }

  VertexSet m_all(int q, int i) const {
    VertexSet out;
    for (VertexId v : rinv[q])
      if (block[v].first <= i && i <= block[v].second) out.push_back(v);
    return out;
  }
  VertexSet m_plus(int q, int i) const {
    VertexSet out;
    for (VertexId v : rinv[q])
      if (block[v].first == i) out.push_back(v);
    return out;
  }
  VertexSet m_minus(int q, int i) const {
    VertexSet out;
    for (VertexId v : rinv[q])
      if (block[v].second == i) out.push_back(v);
    return out;
  }

  // leaf cliques below x, left to right
  std::vector<int> frontier_of(int x) const {
    PQTree sub = tree;
    sub.root = x;
    return sub.frontier();
  }
};

inline void refresh_positions(LabeledPQTree& lt) {
  const int nn = static_cast<int>(lt.tree.nodes.size());
  lt.parent.assign(nn, -1);
  lt.pos.assign(nn, 0);
  for (int x = 0; x < nn; ++x)
    for (int i = 0; i < static_cast<int>(lt.tree.nodes[x].children.size()); ++i) {
      lt.parent[lt.tree.nodes[x].children[i]] = x;
      lt.pos[lt.tree.nodes[x].children[i]] = i + 1;
    }
}

inline LabeledPQTree label_pqtree(const IntervalGraph& g, PQTree t) {
  LabeledPQTree lt;
  lt.n = g.size();
  lt.tree = std::move(t);
  refresh_positions(lt);
  const int nn = static_cast<int>(lt.tree.nodes.size());
  std::vector<int> depth(nn, 0), leaf_of(lt.tree.cliques.size(), -1);
  if (lt.tree.root >= 0) {
    std::vector<int> stack{lt.tree.root};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (lt.tree.nodes[x].kind == NodeKind::Leaf) leaf_of[lt.tree.nodes[x].clique] = x;
      for (int c : lt.tree.nodes[x].children) {
        depth[c] = depth[x] + 1;
        stack.push_back(c);
      }
    }
  }
  std::vector<std::vector<int>> leaves(g.size());
  for (int c = 0; c < static_cast<int>(lt.tree.cliques.size()); ++c)
    for (VertexId v : lt.tree.cliques[c]) leaves[v].push_back(leaf_of[c]);
  lt.charnode.assign(g.size(), -1);
  lt.block.assign(g.size(), {0, 0});
  lt.rinv.assign(nn, {});
  auto lca = [&](int a, int b) {
    while (depth[a] > depth[b]) a = lt.parent[a];
    while (depth[b] > depth[a]) b = lt.parent[b];
    while (a != b) {
      a = lt.parent[a];
      b = lt.parent[b];
    }
    return a;
  };
  for (VertexId v = 0; v < g.size(); ++v) {
    if (leaves[v].empty()) throw NotInterval("vertex outside every clique");
    int z = leaves[v][0];
    for (int y : leaves[v]) z = lca(z, y);
    lt.charnode[v] = z;
    lt.rinv[z].push_back(v);
    if (lt.tree.nodes[z].kind == NodeKind::Q) {
      int a = 1 << 30, b = 0;
      for (int y : leaves[v]) {
        while (lt.parent[y] != z) y = lt.parent[y];
        a = std::min(a, lt.pos[y]);
        b = std::max(b, lt.pos[y]);
      }
      lt.block[v] = {a, b};
    }
  }
  return lt;
}

inline LabeledPQTree labeled_tree(const IntervalGraph& g) { return label_pqtree(g, build_pqtree(g)); }

// Reverses the children of Q-node q and mirrors the blocks of its vertices.
inline LabeledPQTree reverse_q_children(LabeledPQTree lt, int q) {
  if (q < 0 || q >= static_cast<int>(lt.tree.nodes.size()) || !lt.is_q(q)) throw GraphError("node is not a Q-node");
  auto& ch = lt.tree.nodes[q].children;
  std::reverse(ch.begin(), ch.end());
  const int m = static_cast<int>(ch.size());
  for (int i = 0; i < m; ++i) lt.pos[ch[i]] = i + 1;
  for (VertexId v : lt.rinv[q]) lt.block[v] = {m - lt.block[v].second + 1, m - lt.block[v].first + 1};
  return lt;
}

// perm[i] = old position (0-based) of the child placed at position i
inline LabeledPQTree permute_p_children(LabeledPQTree lt, int p, const std::vector<int>& perm) {
  if (p < 0 || p >= static_cast<int>(lt.tree.nodes.size()) || lt.tree.nodes[p].kind != NodeKind::P)
    throw GraphError("node is not a P-node");
  auto old = lt.tree.nodes[p].children;
  if (perm.size() != old.size()) throw GraphError("permutation size mismatch");
  auto& ch = lt.tree.nodes[p].children;
  for (std::size_t i = 0; i < perm.size(); ++i) ch[i] = old.at(perm[i]);
  for (std::size_t i = 0; i < ch.size(); ++i) lt.pos[ch[i]] = static_cast<int>(i) + 1;
  return lt;
}

using CanonicalCode = std::vector<long long>;

struct CanonicalForm {
  CanonicalCode code;
  std::vector<CanonicalCode> node_code;
  std::vector<std::vector<int>> order;  // children in canonical order
  std::vector<char> flipped;            // Q-nodes read right to left
};

namespace detail {

inline void append_sized(CanonicalCode& out, const CanonicalCode& c) {
  out.push_back(static_cast<long long>(c.size()));
  out.insert(out.end(), c.begin(), c.end());
}

inline CanonicalCode q_code(const LabeledPQTree& lt, int q, const std::vector<CanonicalCode>& codes, bool rev) {
  const auto& ch = lt.node(q).children;
  const int m = static_cast<int>(ch.size());
  CanonicalCode out{2, m};
  for (int i = 0; i < m; ++i) append_sized(out, codes[ch[rev ? m - 1 - i : i]]);
  std::vector<std::pair<int, int>> blocks;
  for (VertexId v : lt.rinv[q]) {
    auto [a, b] = lt.block[v];
    blocks.push_back(rev ? std::pair(m - b + 1, m - a + 1) : std::pair(a, b));
  }
  std::sort(blocks.begin(), blocks.end());
  std::vector<long long> entries;
  for (std::size_t i = 0; i < blocks.size();) {
    std::size_t j = i;
    while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
    entries.insert(entries.end(), {blocks[i].first, blocks[i].second, static_cast<long long>(j - i)});
    i = j;
  }
  out.push_back(static_cast<long long>(entries.size() / 3));
  out.insert(out.end(), entries.begin(), entries.end());
  return out;
}

}  // namespace detail

inline CanonicalForm canonical_form(const LabeledPQTree& lt) {
  CanonicalForm cf;
  const int nn = static_cast<int>(lt.tree.nodes.size());
  cf.node_code.assign(nn, {});
  cf.order.assign(nn, {});
  cf.flipped.assign(nn, 0);
  if (lt.tree.root < 0) {
    cf.code = {-1};
    return cf;
  }
  std::function<void(int)> go = [&](int x) {
    const PQNode& nd = lt.node(x);
    for (int c : nd.children) go(c);
    CanonicalCode& out = cf.node_code[x];
    if (nd.kind == NodeKind::Leaf) {
      out = {0, static_cast<long long>(lt.rinv[x].size())};
    } else if (nd.kind == NodeKind::P) {
      std::vector<int> ord = nd.children;
      std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return cf.node_code[a] < cf.node_code[b]; });
      out = {1, static_cast<long long>(lt.rinv[x].size()), static_cast<long long>(ord.size())};
      for (int c : ord) detail::append_sized(out, cf.node_code[c]);
      cf.order[x] = std::move(ord);
    } else {
      CanonicalCode fwd = detail::q_code(lt, x, cf.node_code, false);
      CanonicalCode rev = detail::q_code(lt, x, cf.node_code, true);
      cf.flipped[x] = rev < fwd;
      out = cf.flipped[x] ? std::move(rev) : std::move(fwd);
      cf.order[x] = nd.children;
      if (cf.flipped[x]) std::reverse(cf.order[x].begin(), cf.order[x].end());
    }
  };
  go(lt.tree.root);
  cf.code = cf.node_code[lt.tree.root];
  return cf;
}

inline CanonicalCode canonical_code(const LabeledPQTree& lt) { return canonical_form(lt).code; }

inline CanonicalCode canonical_code(const IntervalGraph& g) { return canonical_code(labeled_tree(g)); }

inline bool are_isomorphic(const IntervalGraph& g1, const IntervalGraph& g2) {
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return false;
  return canonical_code(g1) == canonical_code(g2);
}

inline bool is_isomorphism(const IntervalGraph& g1, const IntervalGraph& g2, const std::vector<VertexId>& phi) {
  if (g1.size() != g2.size() || static_cast<int>(phi.size()) != g1.size()) return false;
  std::vector<char> hit(g2.size(), 0);
  for (VertexId w : phi) {
    if (w < 0 || w >= g2.size() || hit[w]) return false;
    hit[w] = 1;
  }
  for (VertexId u = 0; u < g1.size(); ++u)
    for (VertexId v = u + 1; v < g1.size(); ++v)
      if (g1.adjacent(u, v) != g2.adjacent(phi[u], phi[v])) return false;
  return true;
}

// phi[v] = image in g2 of vertex v of g1
inline std::vector<VertexId> extract_isomorphism(const IntervalGraph& g1, const IntervalGraph& g2) {
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) throw NotIsomorphic("size mismatch");
  std::vector<VertexId> phi(g1.size(), -1);
  if (g1.size() == 0) return phi;
  LabeledPQTree t1 = labeled_tree(g1), t2 = labeled_tree(g2);
  CanonicalForm c1 = canonical_form(t1), c2 = canonical_form(t2);
  if (c1.code != c2.code) throw NotIsomorphic("canonical codes differ");
  auto keyed = [](const LabeledPQTree& t, const CanonicalForm& c, int x) {
    std::vector<std::pair<std::pair<int, int>, VertexId>> out;
    const int m = t.arity(x);
    for (VertexId v : t.rinv[x]) {
      std::pair<int, int> b{0, 0};
      if (t.is_q(x)) {
        b = t.block[v];
        if (c.flipped[x]) b = {m - b.second + 1, m - b.first + 1};
      }
      out.push_back({b, v});
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::function<void(int, int)> align = [&](int x1, int x2) {
    auto k1 = keyed(t1, c1, x1), k2 = keyed(t2, c2, x2);
    for (std::size_t i = 0; i < k1.size(); ++i) phi[k1[i].second] = k2[i].second;
    for (std::size_t i = 0; i < c1.order[x1].size(); ++i) align(c1.order[x1][i], c2.order[x2][i]);
  };
  align(t1.tree.root, t2.tree.root);
  if (!is_isomorphism(g1, g2, phi)) throw std::logic_error("aligned canonical trees gave a non-isomorphism");
  return phi;
}

// Nested dump in canonical orientation; ties between equal codes broken by clique contents.
inline std::string dump_pqtree(const LabeledPQTree& lt) {
  std::ostringstream os;
  if (lt.tree.root < 0) return "(empty)\n";
  CanonicalForm cf = canonical_form(lt);
  std::vector<VertexSet> covered(lt.tree.nodes.size());
  for (int x = 0; x < static_cast<int>(lt.tree.nodes.size()); ++x) {
    for (int c : lt.frontier_of(x)) covered[x].insert(covered[x].end(), lt.tree.cliques[c].begin(), lt.tree.cliques[c].end());
    normalize(covered[x]);
  }
  auto set_str = [](const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    return out + "}";
  };
  std::function<void(int, int)> go = [&](int x, int d) {
    os << std::string(2 * d, ' ');
    const PQNode& nd = lt.node(x);
    if (nd.kind == NodeKind::Leaf) {
      os << "L:" << set_str(lt.tree.cliques[nd.clique]) << " R=" << set_str(lt.rinv[x]) << '\n';
      return;
    }
    std::vector<int> ord = nd.children;
    bool flip = false;
    if (nd.kind == NodeKind::P) {
      os << "P R=" << set_str(lt.rinv[x]) << '\n';
      std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        return std::tie(cf.node_code[a], covered[a]) < std::tie(cf.node_code[b], covered[b]);
      });
    } else {
      const int m = lt.arity(x);
      flip = cf.flipped[x];
      if (detail::q_code(lt, x, cf.node_code, false) == detail::q_code(lt, x, cf.node_code, true)) {
        std::vector<VertexSet> fwd, rev;
        for (int c : ord) fwd.push_back(covered[c]);
        rev.assign(fwd.rbegin(), fwd.rend());
        flip = rev < fwd;
      }
      if (flip) std::reverse(ord.begin(), ord.end());
      os << "Q";
      std::vector<std::tuple<int, int, VertexId>> shown;
      for (VertexId v : lt.rinv[x]) {
        auto [a, b] = lt.block[v];
        if (flip) std::tie(a, b) = std::pair(m - b + 1, m - a + 1);
        shown.emplace_back(a, b, v);
      }
      std::sort(shown.begin(), shown.end());
      for (auto [a, b, v] : shown) os << ' ' << v << ":[" << a << ',' << b << ']';
      os << '\n';
    }
    for (int c : ord) go(c, d + 1);
  };
  go(lt.tree.root, 0);
  return os.str();
}

}  // namespace icl
