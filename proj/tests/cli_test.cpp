#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "gtest/gtest.h"
#include "json.hpp"
#include "support/oracles.hpp"
#include "wibsp/cli.hpp"
#include "wibsp/io.hpp"
#include "wibsp/reduction.hpp"

namespace wibsp {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("wibsp_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path, std::ios::binary) << text;
    return path;
  }

  fs::path dir_;
};

TEST_F(CliTest, SolveExactJsonOnFiveCycle) {
  const auto path = write("c5.dimacs", write_instance(testing::cycle(5)));
  const auto r = run({"solve", path, "--engine", "exact", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["weight"], 4);
  EXPECT_EQ(doc["optimal"], true);
  EXPECT_EQ(doc["nodes"].size(), 4U);
  EXPECT_EQ(doc["stats"]["engine"], "exact");
}

TEST_F(CliTest, SolveTextOutput) {
  const auto path = write("k3.dimacs", "p edge 3 3\nv 1 10\ne 1 2\ne 2 3\ne 1 3\n");
  for (const std::string engine : {"exact", "approx", "bruteforce"}) {
    const auto r = run({"solve", path, "--engine", engine});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("weight: 11\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("oct_weight: 1\n"), std::string::npos) << r.out;
  }
}

TEST_F(CliTest, ReduceTriangle) {
  const auto path = write("k3.dimacs", write_instance(testing::complete(3)));
  const auto r = run({"reduce", path});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "p edge 6 9");
  const auto h = parse_instance(r.out);
  EXPECT_EQ(h, build_h(testing::complete(3)).h());
  // layer-2 copy of node 1 is written as n + 1 + 1 = 5
  EXPECT_NE(r.out.find("e 2 5\n"), std::string::npos);
}

TEST_F(CliTest, ReduceMatchesBuildH) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = testing::gnp(12, 0.3, seed);
    const auto path = write("g.dimacs", write_instance(g));
    const auto r = run({"reduce", path});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(parse_instance(r.out), build_h(g).h());
  }
}

TEST_F(CliTest, VerifyAcceptsSolveOutputAndRejectsTampering) {
  const auto g = testing::gnp(10, 0.5, 3);
  const auto instance = write("g.dimacs", write_instance(g));
  const auto solved = run({"solve", instance, "--json"});
  ASSERT_EQ(solved.code, kExitOk);
  const auto good = write("good.json", solved.out);
  const auto ok = run({"verify", instance, good});
  EXPECT_EQ(ok.code, kExitOk) << ok.out;

  auto doc = nlohmann::json::parse(solved.out);
  doc["weight"] = doc["weight"].get<int>() + 1;
  const auto bad_weight = run({"verify", instance, write("w.json", doc.dump())});
  EXPECT_EQ(bad_weight.code, kExitFailure);
  EXPECT_EQ(bad_weight.out, "invalid: weight mismatch\n");

  doc = nlohmann::json::parse(solved.out);
  auto side_b = doc["side_b"];
  for (const auto& v : side_b) doc["side_a"].push_back(v);
  doc["side_b"] = nlohmann::json::array();
  std::vector<int> ids = doc["side_a"].get<std::vector<int>>();
  std::sort(ids.begin(), ids.end());
  doc["side_a"] = ids;
  const auto merged = run({"verify", instance, write("m.json", doc.dump())});
  EXPECT_EQ(merged.code, kExitFailure);
  EXPECT_EQ(merged.out, "invalid: side_a not independent\n");

  const auto garbage = run({"verify", instance, write("x.json", "{")});
  EXPECT_EQ(garbage.code, kExitFailure);
}

TEST_F(CliTest, BudgetExhaustionExitsThree) {
  GeneratorParams params;
  params.n = 60;
  params.p = 0.2;
  const auto path = write("big.dimacs", write_instance(generate(Family::gnp, params, WeightRange::unit(), 1)));
  const auto r = run({"solve", path, "--json", "--budget-nodes", "2"});
  EXPECT_EQ(r.code, kExitBudget);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["optimal"], false);
  const auto ok = run({"verify", path, write("s.json", r.out)});
  EXPECT_EQ(ok.code, kExitOk);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"solve"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", (dir_ / "missing").string()}).code, kExitUsage);
  const auto path = write("bad.dimacs", "p edge 2 1\ne 1 1\n");
  const auto bad = run({"solve", path});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"solve", path, "--engine", "magic"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "gnp", "--n", "5", "--p", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "lattice", "--n", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, BruteforceRefusalExitsOne) {
  const auto path = write("e.dimacs", write_instance(testing::make_graph(21, {})));
  const auto r = run({"solve", path, "--engine", "bruteforce"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_EQ(run({"solve", path, "--engine", "bruteforce", "--max-bruteforce", "21"}).code, kExitOk);
}

TEST_F(CliTest, GenIsDeterministic) {
  const std::vector<std::string> args{"gen", "gnp", "--n", "20", "--p", "0.3", "--seed", "42"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"gen", "cycle", "--n", "5", "--weights", "unit"}).out, write_instance(testing::cycle(5)));
  EXPECT_EQ(run({"gen", "bipartite-random", "--n1", "3", "--n2", "4", "--p", "1"}).out.substr(0, 13), "p edge 7 12\nv");
}

TEST_F(CliTest, GenWritesOutputFile) {
  const auto path = (dir_ / "out.dimacs").string();
  ASSERT_EQ(run({"gen", "star", "--n", "4", "--weights", "unit", "-o", path}).code, kExitOk);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), write_instance(testing::star(3)));
}

TEST_F(CliTest, BenchGridAndCorpus) {
  const auto grid = run({"bench", "--sizes", "8,10", "--p", "0.4", "--per-cell", "2", "--seed", "3", "--no-timing"});
  ASSERT_EQ(grid.code, kExitOk) << grid.err;
  EXPECT_EQ(std::count(grid.out.begin(), grid.out.end(), '\n'), 5);
  EXPECT_EQ(grid.out.find("exact_ms"), std::string::npos);

  const auto corpus = dir_ / "corpus";
  fs::create_directories(corpus);
  std::ofstream(corpus / "b.dimacs") << write_instance(testing::cycle(5));
  std::ofstream(corpus / "a.dimacs") << write_instance(testing::complete(4));
  const auto r = run({"bench", "--corpus", corpus.string(), "--jobs", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(first.rfind("a.dimacs,4,6,3,2,true,2,1.000000,true,", 0), 0U) << first;
  EXPECT_EQ(second.rfind("b.dimacs,5,5,2,4,true,", 0), 0U) << second;
}

}  // namespace
}  // namespace wibsp
