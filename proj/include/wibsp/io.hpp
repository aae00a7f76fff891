#pragma once

#include <string>
#include <string_view>

#include "wibsp/graph.hpp"
#include "wibsp/reduction.hpp"
#include "wibsp/solvers.hpp"

namespace wibsp {

/// Weighted DIMACS:
///
///   c <comment>
///   p edge <n> <m>
///   v <id> <weight>     optional, missing ids weigh 1
///   e <u> <v>
///
/// Ids are 1-based. Throws ParseError carrying the offending line number.
WeightedGraph parse_instance(std::string_view text);

/// Canonical form: header, one `v` line per node, then edges (u < v) sorted. LF endings.
std::string write_instance(const WeightedGraph& g);

/// Contents of a solution JSON document.
struct SolutionRecord {
  LiftedSolution solution;
  bool optimal = false;
  std::string engine;
  SolveStats stats;
};

/// {"weight", "optimal", "nodes", "side_a", "side_b", "stats"} with 1-based ids.
std::string write_solution(const SolutionRecord& record);

/// Reads a document produced by write_solution. Only the solution fields are
/// required; stats are informational. Throws InvalidSolution on a schema
/// violation, non-positive id or repeated id.
SolutionRecord parse_solution(std::string_view text);

}  // namespace wibsp
