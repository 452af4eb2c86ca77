#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace icl {

// Find a clique of size k in f.
struct CliqueInstance {
  IntervalGraph f;
  int k = 0;
};

// Pattern h embeds in host g as an induced subgraph iff f has a k-clique.
struct CliqueReduction {
  IntervalGraph h, g;
  std::vector<std::string> h_names, g_names;
};

namespace detail {

// Gadget intervals over indices 1..n joined by the given ordered pairs (i,j), i != j.
inline std::pair<std::vector<Interval>, std::vector<std::string>> reduction_model(
    long long n, const std::vector<std::pair<long long, long long>>& links) {
  std::vector<Interval> m;
  std::vector<std::string> names;
  auto add = [&](std::string name, long long l, long long r) {
    m.push_back({l, r});
    names.push_back(std::move(name));
  };
  for (long long i = 1; i <= n; ++i) {
    const std::string s = std::to_string(i);
    add("a+" + s, 10 * i - 8, 10 * i - 5);
    add("a-" + s, -10 * i + 5, -10 * i + 8);
    add("b+" + s, 10 * i - 6, 10 * i - 3);
    add("b-" + s, -10 * i + 3, -10 * i + 6);
    add("c+" + s, 10 * i - 4, 10 * i - 1);
    add("c-" + s, -10 * i + 1, -10 * i + 4);
    add("d+" + s, 10 * i - 2, 10 * i);
    add("d-" + s, -10 * i, -10 * i + 2);
    add("f" + s + "," + s, -10 * i + 5, 10 * i - 5);
  }
  for (auto [i, j] : links) add("f" + std::to_string(i) + "," + std::to_string(j), -10 * i + 7, 10 * j - 7);
  add("g-", -10 * n, -1);
  add("g+", 1, 10 * n);
  return {std::move(m), std::move(names)};
}

}  // namespace detail

inline CliqueReduction build_clique_reduction(const CliqueInstance& ci) {
  const int n = ci.f.size();
  if (ci.k < 1 || ci.k > n) throw GraphError("clique size must lie in [1, n]");
  std::vector<std::pair<long long, long long>> edge_links, all_links;
  for (auto [u, v] : ci.f.edges()) {
    edge_links.emplace_back(u + 1, v + 1);
    edge_links.emplace_back(v + 1, u + 1);
  }
  for (long long i = 1; i <= ci.k; ++i)
    for (long long j = 1; j <= ci.k; ++j)
      if (i != j) all_links.emplace_back(i, j);
  auto [gm, gn] = detail::reduction_model(n, edge_links);
  auto [hm, hn] = detail::reduction_model(ci.k, all_links);
  return {graph_from_intervals(hm), graph_from_intervals(gm), std::move(hn), std::move(gn)};
}

}  // namespace icl
