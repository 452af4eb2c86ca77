#pragma once

#include <map>
#include <string>
#include <vector>

#include "trace.hpp"

namespace icl {

inline long long depth_bound(long long k) { return 8 * k * k * k + 76 * k * k; }

// Structural invariants a recorded run must satisfy; each violation is described in one line.
inline std::vector<std::string> check_trace(const std::vector<Trace::json>& events) {
  std::vector<std::string> bad;
  std::map<std::string, std::size_t> pending_overflow;  // branch -> frag_state index
  std::map<std::string, int> flat_chain;                // branch of a loop split -> constant-measure property-8 run ending there
  auto enclosing_chain = [&](std::string b) {
    while (true) {
      const auto cut = b.rfind('/');
      if (cut == std::string::npos) return 0;
      b.resize(cut);
      if (auto it = flat_chain.find(b); it != flat_chain.end()) return it->second;
    }
  };
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    const std::string ev = e.at("event");
    const auto& p = e.at("payload");
    const std::string where = e.at("branch").get<std::string>() + " (" + e.at("rule").get<std::string>() + ")";
    if (ev == "outcome") {
      const std::string kind = p.at("kind");
      const int k = p.at("k");
      if (kind == "necessary_set") {
        const int sz = p.at("size");
        if (sz < 1 || sz > 2 * k + 1) bad.push_back("necessary set of size " + std::to_string(sz) + " at " + where);
      } else if (kind == "subproblem") {
        const int q = p.at("param");
        if (q < 1 || q > k - 1) bad.push_back("subproblem parameter " + std::to_string(q) + " at " + where);
      }
      auto it = pending_overflow.find(e.at("branch"));
      if (it != pending_overflow.end()) {
        if (kind != "reject" || p.at("reason") != "too_many_fragments")
          bad.push_back("fragment overflow not rejected at " + where);
        pending_overflow.erase(it);
      }
    } else if (ev == "frag_state") {
      const int k = p.at("k");
      if (p.at("state").at("nontrivial").get<int>() > 2 * k) pending_overflow[e.at("branch")] = i;
      if (e.at("depth").get<long long>() > depth_bound(k)) bad.push_back("branching depth above bound at " + where);
    } else if (ev == "right_split") {
      const int before = p.at("mu_before"), after = p.at("mu_after"), ell = p.at("ell");
      if (after < before) bad.push_back("measure decreased across a split at " + where);
      if (p.at("source") != "loop") continue;
      const std::string& br = e.at("branch");
      const int run = ell == 8 && after == before ? enclosing_chain(br) + 1 : 0;
      flat_chain[br] = run;
      if (run > p.at("k").get<int>()) bad.push_back("property-8 splits at constant measure exceed k at " + where);
      if (ell == 10) {
        // the measure only covers properties 1..9, which all hold here, so it must already be maximal
        if (before != 18 * p.at("nontrivial_before").get<int>())
          bad.push_back("property-10 split from a state that is not 9-proper at " + where);
      } else if (ell != 8 && after <= before) {
        bad.push_back("measure not increased by a property-" + std::to_string(ell) + " split at " + where);
      }
    }
  }
  for (const auto& [branch, idx] : pending_overflow) bad.push_back("fragment overflow without outcome at " + branch);
  return bad;
}

}  // namespace icl
