#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "icl/cleaner.hpp"
#include "icl/hardness.hpp"
#include "icl/io.hpp"
#include "icl/modules.hpp"
#include "icl/oracle.hpp"

namespace {

using namespace icl;

constexpr int kYes = 0, kNo = 1, kError = 2;

void print_set(const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? " " : "") << s[i];
  std::cout << '\n';
}

void write_pair(const std::string& prefix, const IntervalGraph& g) {
  save_graph(prefix + ".graph", g);
  save_model(prefix + ".intervals", g.model());
}

struct CleanArgs {
  std::string gprime, g, model, prime_model, trace;
  int jobs = 1;
};

int run_clean(const CleanArgs& a) {
  CleaningInstance inst{ensure_model(load_graph(a.gprime, a.prime_model)), ensure_model(load_graph(a.g, a.model))};
  Trace trace;
  CleanOptions opts{a.trace.empty() ? nullptr : &trace, a.jobs};
  const auto s = interval_cleaning(inst, opts);
  if (!a.trace.empty()) {
    std::ofstream out(a.trace);
    if (!out) throw GraphError("cannot write " + a.trace);
    trace.write_jsonl(out);
  }
  if (!s) return kNo;
  print_set(s->deleted);
  return kYes;
}

int run_modules(const std::string& path, const std::string& model, int h) {
  const IntervalGraph g = ensure_model(load_graph(path, model));
  for (const auto& m : complete_modules(g)) {
    if (h >= 0 && !m.is_short(h)) continue;
    for (std::size_t i = 0; i < m.vertices.size(); ++i) std::cout << (i ? " " : "") << m.vertices[i];
    if (m.witness == Witness::Subtree) std::cout << " | subtree " << m.node;
    else std::cout << " | block " << m.node << " [" << m.a << "," << m.b << "]";
    std::cout << " |" << (m.simple ? " simple" : "") << (m.leaf ? " leaf" : "");
    if (auto s = m.short_for()) std::cout << " short=" << *s;
    std::cout << '\n';
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval graph cleaning: delete k vertices of G to obtain G'"};
  app.require_subcommand(1);

  CleanArgs clean;
  auto* c = app.add_subcommand("clean", "find k vertices of G whose removal leaves G'");
  c->add_option("gprime", clean.gprime, "smaller graph G'")->required();
  c->add_option("g", clean.g, "host graph G")->required();
  c->add_option("--model", clean.model, "interval model for G");
  c->add_option("--prime-model", clean.prime_model, "interval model for G'");
  c->add_option("--trace", clean.trace, "write a JSON-lines event trace here");
  c->add_option("--jobs", clean.jobs, "worker threads for the top-level branches")->check(CLI::Range(1, 256));

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "test two interval graphs for isomorphism");
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  std::string tree_path, tree_model;
  auto* tree = app.add_subcommand("pqtree", "print the labeled PQ-tree");
  tree->add_option("graph", tree_path)->required();
  tree->add_option("--model", tree_model);

  std::string mod_path, mod_model;
  int mod_short = -1;
  auto* mods = app.add_subcommand("modules", "list complete modules");
  mods->add_option("graph", mod_path)->required();
  mods->add_option("--model", mod_model);
  mods->add_option("--short", mod_short, "only modules that are h-short for this h")->check(CLI::NonNegativeNumber);

  std::string hard_f, hard_prefix;
  int hard_k = 0;
  auto* hard = app.add_subcommand("gen-hardness", "build the clique reduction pair (H, G) from F");
  hard->add_option("f", hard_f, "graph F")->required();
  hard->add_option("k", hard_k, "clique size")->required();
  hard->add_option("--out-prefix", hard_prefix)->required();

  int rnd_n = 0, rnd_k = 0;
  std::uint64_t rnd_seed = 0;
  double rnd_knob = 0.0;
  std::string rnd_prefix;
  auto* rnd = app.add_subcommand("gen-random", "random interval graph, or a planted instance when --k > 0");
  rnd->add_option("--n", rnd_n)->required()->check(CLI::PositiveNumber);
  rnd->add_option("--k", rnd_k)->check(CLI::NonNegativeNumber);
  rnd->add_option("--seed", rnd_seed)->required();
  rnd->add_option("--knob", rnd_knob, "interval lengths uniform in [1, knob*n]; drawn from the seed when 0");
  rnd->add_option("--out-prefix", rnd_prefix)->required();

  std::string or_a, or_b;
  int or_limit = 12;
  auto* orc = app.add_subcommand("oracle-clean", "exhaustive cleaning over all k-subsets");
  orc->add_option("gprime", or_a)->required();
  orc->add_option("g", or_b)->required();
  orc->add_option("--limit", or_limit, "refuse hosts with more vertices")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kYes : kError;
  }

  try {
    if (*c) return run_clean(clean);
    if (*iso) {
      const bool same = are_isomorphic(load_graph(iso_a), load_graph(iso_b));
      std::cout << (same ? "isomorphic" : "not isomorphic") << '\n';
      return same ? kYes : kNo;
    }
    if (*tree) {
      std::cout << dump_pqtree(labeled_tree(ensure_model(load_graph(tree_path, tree_model))));
      return kYes;
    }
    if (*mods) return run_modules(mod_path, mod_model, mod_short);
    if (*hard) {
      const auto r = build_clique_reduction({load_graph(hard_f), hard_k});
      write_pair(hard_prefix + "_H", r.h);
      write_pair(hard_prefix + "_G", r.g);
      std::cout << "H " << r.h.size() << " G " << r.g.size() << " k " << r.g.size() - r.h.size() << '\n';
      return kYes;
    }
    if (*rnd) {
      if (rnd_k >= rnd_n) throw GraphError("--k must be below --n");
      if (rnd_k == 0) {
        write_pair(rnd_prefix, random_interval_graph(rnd_n, rnd_seed, rnd_knob > 0 ? rnd_knob : 1.0));
        return kYes;
      }
      const auto p = plant_instance(rnd_n, rnd_k, rnd_seed, rnd_knob);
      write_pair(rnd_prefix + "_Gprime", ensure_model(p.instance.gprime));
      write_pair(rnd_prefix + "_G", p.instance.g);
      print_set(p.planted);
      return kYes;
    }
    if (*orc) {
      const auto s = brute_force_clean({load_graph(or_a), load_graph(or_b)}, or_limit);
      if (!s) return kNo;
      print_set(s->deleted);
      return kYes;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
