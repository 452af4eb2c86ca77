#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "icl/hardness.hpp"
#include "icl/io.hpp"
#include "icl/oracle.hpp"

using namespace icl;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("icl_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    put("p4.graph", fx::path(4));
    put("p5.graph", fx::path(5));
    put("k3.graph", fx::complete(3));
    put("c4.graph", fx::cycle(4));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string at(const std::string& name) const { return (dir_ / name).string(); }

  void put(const std::string& name, const IntervalGraph& g) const { save_graph(at(name), g); }

  Outcome run(const std::string& args) const {
    const std::string cmd = std::string(ICL_CLI_PATH) + " " + args + " 2>/dev/null";
    Outcome r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  fs::path dir_;
};

VertexSet parse_ids(const std::string& s) {
  std::istringstream in(s);
  VertexSet out;
  for (VertexId v; in >> v;) out.push_back(v);
  return out;
}

}  // namespace

TEST_F(Cli, CleanPrintsOneVertexForPathPair) {
  const Outcome r = run("clean " + at("p4.graph") + " " + at("p5.graph"));
  EXPECT_EQ(r.code, 0);
  const VertexSet s = parse_ids(r.out);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_TRUE(are_isomorphic(delete_vertices(fx::path(5), s), fx::path(4)));
}

TEST_F(Cli, CleanWithoutSolutionExitsOne) {
  const Outcome r = run("clean " + at("k3.graph") + " " + at("p4.graph"));
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(Cli, IsoOnSameGraph) {
  const Outcome r = run("iso " + at("p5.graph") + " " + at("p5.graph"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "isomorphic\n");
  EXPECT_EQ(run("iso " + at("p5.graph") + " " + at("p4.graph")).code, 1);
}

TEST_F(Cli, ErrorsExitTwo) {
  EXPECT_EQ(run("clean " + at("missing.graph") + " " + at("p5.graph")).code, 2);
  EXPECT_EQ(run("clean " + at("p4.graph") + " " + at("c4.graph")).code, 2);
  EXPECT_EQ(run("clean " + at("p4.graph")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("clean " + at("p4.graph") + " " + at("p5.graph") + " --jobs 0").code, 2);
  std::ofstream(at("bad.graph")) << "3 2\n0 1\n";
  EXPECT_EQ(run("iso " + at("bad.graph") + " " + at("p4.graph")).code, 2);
}

TEST_F(Cli, TraceIsJsonLines) {
  const Outcome r = run("clean " + at("p4.graph") + " " + at("p5.graph") + " --trace " + at("t.jsonl"));
  ASSERT_EQ(r.code, 0);
  std::ifstream in(at("t.jsonl"));
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto e = nlohmann::json::parse(line);
    for (const char* key : {"event", "depth", "rule", "branch", "payload"}) EXPECT_TRUE(e.contains(key)) << line;
    ++lines;
  }
  EXPECT_GT(lines, 0);
}

TEST_F(Cli, JobsDoNotChangeTheAnswer) {
  for (int seed = 1; seed <= 5; ++seed) {
    const auto p = plant_instance(9, 2, seed);
    put("a.graph", p.instance.gprime);
    put("b.graph", p.instance.g);
    const Outcome one = run("clean " + at("a.graph") + " " + at("b.graph"));
    const Outcome four = run("clean " + at("a.graph") + " " + at("b.graph") + " --jobs 4");
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out);
  }
}

TEST_F(Cli, ModelFileIsUsed) {
  save_model(at("p5.intervals"), fx::path(5).model());
  const Outcome r = run("clean " + at("p4.graph") + " " + at("p5.graph") + " --model " + at("p5.intervals"));
  EXPECT_EQ(r.code, 0);
  // a model that disagrees with the edges is rejected
  save_model(at("wrong.intervals"), fx::complete(5).model());
  EXPECT_EQ(run("clean " + at("p4.graph") + " " + at("p5.graph") + " --model " + at("wrong.intervals")).code, 2);
}

TEST_F(Cli, GenRandomRoundTrips) {
  const Outcome r = run("gen-random --n 9 --k 2 --seed 11 --out-prefix " + at("r"));
  ASSERT_EQ(r.code, 0);
  const auto p = plant_instance(9, 2, 11);
  EXPECT_EQ(parse_ids(r.out), p.planted);
  EXPECT_EQ(load_graph(at("r_G.graph")), p.instance.g);
  EXPECT_EQ(load_graph(at("r_G.intervals")), p.instance.g);
  EXPECT_EQ(load_graph(at("r_Gprime.graph")), p.instance.gprime);
  EXPECT_EQ(load_graph(at("r_Gprime.intervals")), p.instance.gprime);
  EXPECT_EQ(run("gen-random --n 7 --seed 2 --out-prefix " + at("single")).code, 0);
  EXPECT_EQ(load_graph(at("single.graph")), random_interval_graph(7, 2, 1.0));
}

TEST_F(Cli, GenHardnessWritesBothGraphs) {
  const Outcome r = run("gen-hardness " + at("k3.graph") + " 2 --out-prefix " + at("h"));
  ASSERT_EQ(r.code, 0);
  const auto want = build_clique_reduction({fx::complete(3), 2});
  EXPECT_EQ(load_graph(at("h_H.graph")), want.h);
  EXPECT_EQ(load_graph(at("h_G.graph")), want.g);
  EXPECT_EQ(load_graph(at("h_G.intervals")), want.g);
  EXPECT_EQ(load_graph(at("h_G.graph")).size(), 9 * 3 + 2 * 3 + 2);
  EXPECT_EQ(run("gen-hardness " + at("k3.graph") + " 5 --out-prefix " + at("h")).code, 2);
}

TEST_F(Cli, OracleCleanMatchesLibrary) {
  const Outcome r = run("oracle-clean " + at("p4.graph") + " " + at("p5.graph"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
  EXPECT_EQ(run("oracle-clean " + at("k3.graph") + " " + at("p4.graph")).code, 1);
}

TEST_F(Cli, TreeAndModuleListings) {
  const Outcome t = run("pqtree " + at("p5.graph"));
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out.rfind("Q", 0), 0u);
  const Outcome m = run("modules " + at("p5.graph"));
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("0 | subtree"), std::string::npos);
  const Outcome s = run("modules " + at("p5.graph") + " --short 0");
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.find("block"), std::string::npos);
}
