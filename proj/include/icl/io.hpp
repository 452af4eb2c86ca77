#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace icl {

namespace detail {

// whitespace tokens with '#' comment lines dropped
inline std::vector<std::string> tokens(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) out.push_back(t);
  }
  return out;
}

inline long long to_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw GraphError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw GraphError("not an integer: '" + s + "'");
  return v;
}

}  // namespace detail

// "n m" then m lines "u v"
inline IntervalGraph read_graph(std::istream& in) {
  auto t = detail::tokens(in);
  if (t.size() < 2) throw GraphError("graph header 'n m' missing");
  long long n = detail::to_int(t[0]), m = detail::to_int(t[1]);
  if (n < 0 || m < 0) throw GraphError("negative counts in header");
  if (t.size() != 2 + 2 * static_cast<std::size_t>(m))
    throw GraphError("edge list length does not match header m=" + std::to_string(m));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (long long i = 0; i < m; ++i)
    edges.emplace_back(static_cast<VertexId>(detail::to_int(t[2 + 2 * i])),
                       static_cast<VertexId>(detail::to_int(t[3 + 2 * i])));
  return IntervalGraph::from_edges(static_cast<int>(n), edges);
}

// n lines "id left right", ids dense in [0, n)
inline std::vector<Interval> read_model(std::istream& in) {
  auto t = detail::tokens(in);
  if (t.size() % 3 != 0) throw GraphError("model lines must have three fields");
  const std::size_t n = t.size() / 3;
  std::vector<Interval> model(n);
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long long id = detail::to_int(t[3 * i]);
    if (id < 0 || id >= static_cast<long long>(n) || seen[id]) throw GraphError("bad or repeated id " + t[3 * i]);
    seen[id] = 1;
    model[id] = {detail::to_int(t[3 * i + 1]), detail::to_int(t[3 * i + 2])};
    if (model[id].left > model[id].right) throw GraphError("malformed interval at vertex " + t[3 * i]);
  }
  return model;
}

inline void write_graph(std::ostream& out, const IntervalGraph& g) {
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void write_model(std::ostream& out, const std::vector<Interval>& model) {
  for (std::size_t v = 0; v < model.size(); ++v) out << v << ' ' << model[v].left << ' ' << model[v].right << '\n';
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return in;
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// A path ending in ".intervals" is read as a model, anything else as an edge list.
inline IntervalGraph load_graph(const std::string& path) {
  auto in = open_input(path);
  if (ends_with(path, ".intervals")) return graph_from_intervals(read_model(in));
  return read_graph(in);
}

inline IntervalGraph load_graph(const std::string& path, const std::string& model_path) {
  IntervalGraph g = load_graph(path);
  if (model_path.empty()) return g;
  auto in = open_input(model_path);
  return g.with_model(read_model(in));
}

inline void save_graph(const std::string& path, const IntervalGraph& g) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path);
  write_graph(out, g);
}

inline void save_model(const std::string& path, const std::vector<Interval>& model) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path);
  write_model(out, model);
}

}  // namespace icl
