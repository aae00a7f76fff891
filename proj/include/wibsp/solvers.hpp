#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "wibsp/graph.hpp"
#include "wibsp/reduction.hpp"

namespace wibsp {

struct SolverLimits {
  static constexpr std::size_t kDefaultWispBruteforceNodes = 25;
  static constexpr std::size_t kDefaultWibspBruteforceNodes = 20;

  std::size_t max_nodes_for_bruteforce = kDefaultWispBruteforceNodes;
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::milliseconds> time_budget;

  /// Throws std::invalid_argument if a budget is present but not positive.
  void validate() const;
};

struct SolveStats {
  std::uint64_t search_nodes = 0;
  std::uint64_t domination_reductions = 0;
  std::uint64_t zero_weight_reductions = 0;
  std::uint64_t local_search_moves = 0;
  double elapsed_ms = 0.0;
};

struct SolveResult {
  NodeSet solution;
  Weight weight = 0;
  bool optimal = false;
  SolveStats stats;
};

/// Exhaustive maximum-weight independent set. Ties go to the lexicographically
/// smallest member list among solutions without zero-weight nodes.
/// Throws SolverRefusal above limits.max_nodes_for_bruteforce (hard cap 64).
SolveResult wisp_bruteforce(const WeightedGraph& g, const SolverLimits& limits = {});

/// Branch-and-reduce maximum-weight independent set.
///
/// Zero-weight nodes are dropped up front. Before every branch the search
/// includes each node whose weight is at least the weight of its remaining
/// neighborhood, to fixpoint. It then branches on a maximum-degree node
/// (larger weight, then smaller index, breaks ties): include it and drop its
/// neighbors, or drop it. Subtrees are pruned with a greedy clique-cover bound.
/// If a budget runs out the best solution found so far is returned with
/// optimal = false.
SolveResult wisp_exact(const WeightedGraph& g, const SolverLimits& limits = {});

/// Greedy by maximum w(v) / (current degree + 1); ties to the smaller index.
SolveResult wisp_greedy(const WeightedGraph& g);

/// Add-moves and (1,2)-swaps until no improving move remains.
/// Throws InvalidSolution if start is not independent in g.
SolveResult wisp_local_search(const WeightedGraph& g, const NodeSet& start);

/// Exhaustive maximum-weight induced bipartite subgraph straight from the
/// definition. Default guard is 20 nodes; pass limits to change it (hard cap 63).
LiftedSolution wibsp_bruteforce(const WeightedGraph& g, const SolverLimits& limits = {
                                    SolverLimits::kDefaultWibspBruteforceNodes, std::nullopt, std::nullopt});

}  // namespace wibsp
