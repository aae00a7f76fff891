#include "gtest/gtest.h"
#include "support/oracles.hpp"
#include "wibsp/bench.hpp"
#include "wibsp/error.hpp"
#include "wibsp/generate.hpp"
#include "wibsp/io.hpp"

namespace wibsp {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(ParseInstance, WeightedEdge) {
  const auto g = parse_instance("p edge 2 1\nv 1 3\nv 2 5\ne 1 2\n");
  EXPECT_EQ(g, testing::make_graph(2, {{0, 1}}, {3, 5}));
}

TEST(ParseInstance, MissingWeightsDefaultToOne) {
  const auto g = parse_instance("c unweighted\np edge 3 2\ne 1 2\ne 2 3\n");
  EXPECT_EQ(g.weight(0), 1U);
  EXPECT_EQ(g.weight(2), 1U);
  EXPECT_EQ(g.edge_count(), 2U);
}

TEST(ParseInstance, PartialWeights) {
  const auto g = parse_instance("p edge 3 0\nv 2 9\n");
  EXPECT_EQ(g.weight(0), 1U);
  EXPECT_EQ(g.weight(1), 9U);
}

TEST(ParseInstance, ToleratesCrlfAndBlankLines) {
  const auto g = parse_instance("p edge 2 1\r\n\r\ne 1 2\r\n");
  EXPECT_EQ(g.edge_count(), 1U);
}

TEST(ParseInstance, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("p edge 2 1\ne 1 1\n"), 2U);
  EXPECT_EQ(error_line("p edge 2 1\nc ok\ne 1 3\n"), 3U);
  EXPECT_EQ(error_line("p edge 2 0\nv 1 -4\n"), 2U);
  EXPECT_EQ(error_line("p edge 2 0\nv 1 4294967296\n"), 2U);
  EXPECT_EQ(error_line("p edge 2 0\nv 1 2\nv 1 3\n"), 3U);
  EXPECT_EQ(error_line("p edge x 0\n"), 1U);
  EXPECT_EQ(error_line("p graph 2 0\n"), 1U);
  EXPECT_EQ(error_line("p edge 2 0\np edge 2 0\n"), 2U);
  EXPECT_EQ(error_line("e 1 2\np edge 2 1\n"), 1U);
  EXPECT_EQ(error_line("p edge 2 0\nq 1\n"), 2U);
  EXPECT_EQ(error_line("p edge 2 0\ne 1\n"), 2U);
  EXPECT_EQ(error_line("p edge 3 2\ne 1 2\n"), 2U);  // count mismatch, reported at the last line
  EXPECT_EQ(error_line("c nothing\n"), 1U);
  EXPECT_THROW(parse_instance(""), ParseError);
}

TEST(WriteInstance, EmptyGraph) { EXPECT_EQ(write_instance(WeightedGraph{}), "p edge 0 0\n"); }

TEST(WriteInstance, TriangleCanonical) {
  EXPECT_EQ(write_instance(testing::complete(3)),
            "p edge 3 3\n"
            "v 1 1\nv 2 1\nv 3 1\n"
            "e 1 2\ne 1 3\ne 2 3\n");
}

TEST(WriteInstance, RoundTripIsByteExact) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = testing::gnp(seed % 25, 0.3, seed);
    const auto text = write_instance(g);
    const auto parsed = parse_instance(text);
    EXPECT_EQ(parsed, g);
    EXPECT_EQ(write_instance(parsed), text);
  }
}

TEST(Solution, WriteThenParse) {
  SolutionRecord record;
  record.solution = {NodeSet{0, 1, 3}, {NodeSet{0, 3}, NodeSet{1}}, 12};
  record.optimal = true;
  record.engine = "exact";
  record.stats.search_nodes = 42;
  const auto text = write_solution(record);
  EXPECT_EQ(text.rfind("{\n  \"weight\": 12,\n  \"optimal\": true,\n  \"nodes\"", 0), 0U) << text;
  EXPECT_NE(text.find("\"side_a\": [\n    1,\n    4\n  ]"), std::string::npos) << text;

  const auto back = parse_solution(text);
  EXPECT_EQ(back.solution, record.solution);
  EXPECT_TRUE(back.optimal);
  EXPECT_EQ(back.engine, "exact");
  EXPECT_EQ(back.stats.search_nodes, 42U);
}

TEST(Solution, ParseRejectsSchemaViolations) {
  EXPECT_THROW(parse_solution("not json"), InvalidSolution);
  EXPECT_THROW(parse_solution("[]"), InvalidSolution);
  EXPECT_THROW(parse_solution(R"({"nodes":[],"side_a":[],"side_b":[]})"), InvalidSolution);
  EXPECT_THROW(parse_solution(R"({"weight":1,"nodes":[0],"side_a":[0],"side_b":[]})"), InvalidSolution);
  EXPECT_THROW(parse_solution(R"({"weight":1,"nodes":[1,1],"side_a":[1],"side_b":[]})"), InvalidSolution);
  EXPECT_THROW(parse_solution(R"({"weight":1,"nodes":[1],"side_a":"1","side_b":[]})"), InvalidSolution);
  EXPECT_THROW(parse_solution(R"({"weight":1,"nodes":[1],"side_a":[1],"side_b":[],"stats":{"search_nodes":"x"}})"),
               InvalidSolution);
}

TEST(Generate, Families) {
  const auto c5 = generate(Family::cycle, {5}, WeightRange::unit(), 1);
  EXPECT_EQ(c5, testing::cycle(5));

  const auto empty = generate(Family::gnp, {10, 0.0}, WeightRange::unit(), 3);
  EXPECT_EQ(empty.edge_count(), 0U);

  const auto k8 = generate(Family::gnp, {8, 1.0}, WeightRange::unit(), 3);
  EXPECT_EQ(k8, testing::complete(8));

  const auto star = generate(Family::star, {4}, WeightRange::unit(), 0);
  EXPECT_EQ(star, testing::star(3));

  EXPECT_EQ(generate(Family::complete, {6}, WeightRange::unit(), 0), testing::complete(6));

  GeneratorParams bip;
  bip.n1 = 4;
  bip.n2 = 5;
  bip.p = 0.6;
  const auto b = generate(Family::bipartite_random, bip, {}, 9);
  EXPECT_EQ(b.node_count(), 9U);
  EXPECT_TRUE(is_bipartite(b));
  for (const auto& [u, v] : b.edges()) EXPECT_TRUE(u < 4 && v >= 4);
}

TEST(Generate, WeightsInRangeAndDeterministic) {
  const auto a = generate(Family::gnp, {30, 0.3}, WeightRange{5, 9}, 77);
  const auto b = generate(Family::gnp, {30, 0.3}, WeightRange{5, 9}, 77);
  EXPECT_EQ(write_instance(a), write_instance(b));
  for (NodeId v = 0; v < a.node_count(); ++v) {
    EXPECT_GE(a.weight(v), 5U);
    EXPECT_LE(a.weight(v), 9U);
  }
  EXPECT_NE(write_instance(a), write_instance(generate(Family::gnp, {30, 0.3}, WeightRange{5, 9}, 78)));
}

TEST(Generate, RejectsBadParameters) {
  EXPECT_THROW(generate(Family::gnp, {5, 1.5}, {}, 0), std::invalid_argument);
  EXPECT_THROW(generate(Family::gnp, {5, -0.1}, {}, 0), std::invalid_argument);
  EXPECT_THROW(generate(Family::cycle, {2}, {}, 0), std::invalid_argument);
  EXPECT_THROW(generate(Family::gnp, {5, 0.5}, WeightRange{3, 1}, 0), std::invalid_argument);
  EXPECT_THROW(generate(Family::gnp, {5, 0.5}, WeightRange{-1, 1}, 0), std::invalid_argument);
  EXPECT_THROW(parse_family("grid"), std::invalid_argument);
  EXPECT_THROW(WeightRange::parse("1-5"), std::invalid_argument);
  EXPECT_EQ(WeightRange::parse("unit").hi, 1);
  EXPECT_EQ(WeightRange::parse("2:7").lo, 2);
}

TEST(Bench, FormatRatio) {
  EXPECT_EQ(format_ratio(1, 1), "1.000000");
  EXPECT_EQ(format_ratio(2, 3), "0.666667");
  EXPECT_EQ(format_ratio(1, 3), "0.333333");
  EXPECT_EQ(format_ratio(1, 8), "0.125000");
  EXPECT_EQ(format_ratio(0, 0), "1.000000");
  EXPECT_EQ(format_ratio(1, 2000000), "0.000001");  // half rounds up
}

TEST(Bench, RatioBound) {
  EXPECT_TRUE(meets_ratio_bound(3, 4, 2));   // 3 * 5 >= 12
  EXPECT_FALSE(meets_ratio_bound(2, 4, 2));  // 2 * 5 < 12
  EXPECT_TRUE(meets_ratio_bound(0, 0, 0));
}

TEST(Bench, RowsInOrderAndThreadIndependent) {
  BenchGrid grid;
  grid.sizes = {8, 12};
  grid.probabilities = {0.3, 0.6};
  grid.per_cell = 2;
  grid.seed = 5;
  const auto instances = grid_instances(grid);
  ASSERT_EQ(instances.size(), 8U);
  EXPECT_EQ(instances.front().id, "gnp_n8_p0.3_r0");
  const auto serial = run_bench(instances, {}, 1);
  const auto parallel = run_bench(instances, {}, 3);
  EXPECT_EQ(bench_csv(serial, false), bench_csv(parallel, false));
  for (const auto& row : serial) {
    EXPECT_TRUE(row.exact_optimal);
    ASSERT_TRUE(row.bound_ok.has_value());
    EXPECT_TRUE(*row.bound_ok);
    EXPECT_LE(row.approx_weight, row.exact_weight);
  }
  const auto csv = bench_csv(serial);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "instance,n,m,max_degree,exact_weight,exact_optimal,approx_weight,ratio,bound_ok,search_nodes,exact_ms,"
            "approx_ms");
}

}  // namespace
}  // namespace wibsp
