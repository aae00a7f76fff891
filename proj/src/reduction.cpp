#include "wibsp/reduction.hpp"

#include <limits>
#include <vector>

#include "wibsp/error.hpp"

namespace wibsp {

namespace {

void require_matching(const ReducedGraph& r, const WeightedGraph& g) {
  if (r.source_node_count() != g.node_count() || r.h().node_count() != 2 * g.node_count()) {
    throw InvalidSolution("reduced graph was not built from this graph");
  }
}

}  // namespace

ReducedGraph build_h(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  if (n > std::numeric_limits<NodeId>::max() / 2) {
    throw GraphError("doubled node count overflows the index width (n = " + std::to_string(n) + ")");
  }
  const auto source_edges = g.edges();
  if (source_edges.size() > (std::numeric_limits<std::size_t>::max() - n) / 2) {
    throw GraphError("doubled edge count overflows");
  }

  std::vector<EdgeInput> edges;
  edges.reserve(2 * source_edges.size() + n);
  for (const auto& [u, v] : source_edges) edges.emplace_back(u, v);
  for (const auto& [u, v] : source_edges) edges.emplace_back(n + u, n + v);
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, n + i);

  std::vector<std::int64_t> weights(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    weights[i] = weights[n + i] = g.weight(static_cast<NodeId>(i));
  }
  return ReducedGraph(WeightedGraph::from_edge_list(2 * n, edges, weights), n);
}

LiftedSolution lift_independent_set(const ReducedGraph& r, const WeightedGraph& g, const NodeSet& w_i) {
  require_matching(r, g);
  require_in_range(r.h(), w_i);
  if (!is_independent_set(r.h(), w_i)) {
    throw InvalidSolution("node set is not independent in the reduced graph");
  }

  std::vector<NodeId> side_a;
  std::vector<NodeId> side_b;
  for (NodeId v : w_i) {
    (r.layer(v) == Layer::first ? side_a : side_b).push_back(r.base(v));
  }
  LiftedSolution out;
  out.bipartition = {NodeSet(std::move(side_a)), NodeSet(std::move(side_b))};
  out.node_set = set_union(out.bipartition.side_a, out.bipartition.side_b);
  out.weight = set_weight(g, out.node_set);
  return out;
}

std::optional<std::string> find_violation(const WeightedGraph& g, const LiftedSolution& sol) {
  const auto& [side_a, side_b] = sol.bipartition;
  const std::size_t n = g.node_count();
  if (sol.node_set.bound() > n || side_a.bound() > n || side_b.bound() > n) {
    return "member out of range";
  }
  if (intersects(side_a, side_b)) return "sides intersect";
  if (set_union(side_a, side_b) != sol.node_set) return "node_set differs from side_a + side_b";
  if (!is_independent_set(g, side_a)) return "side_a not independent";
  if (!is_independent_set(g, side_b)) return "side_b not independent";
  if (set_weight(g, sol.node_set) != sol.weight) return "weight mismatch";
  return std::nullopt;
}

NodeSet project_bipartite(const ReducedGraph& r, const WeightedGraph& g, const LiftedSolution& sol) {
  require_matching(r, g);
  if (auto violation = find_violation(g, sol)) throw InvalidSolution(*violation);

  std::vector<NodeId> out;
  out.reserve(sol.node_set.size());
  for (NodeId v : sol.bipartition.side_a) out.push_back(r.first_copy(v));
  for (NodeId v : sol.bipartition.side_b) out.push_back(r.second_copy(v));
  return NodeSet(std::move(out));
}

}  // namespace wibsp
