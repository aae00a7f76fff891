#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace wibsp {

using NodeId = std::uint32_t;
using NodeWeight = std::uint32_t;
/// Accumulator for sums of node weights; n * (2^32 - 1) fits for any n < 2^32.
using Weight = std::uint64_t;

/// Sorted, duplicate-free set of node indices.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<NodeId> members);
  NodeSet(std::initializer_list<NodeId> members);

  std::span<const NodeId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(NodeId v) const noexcept;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Largest member + 1, or 0 for the empty set.
  std::size_t bound() const noexcept { return members_.empty() ? 0 : members_.back() + std::size_t{1}; }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> members_;
};

NodeSet set_union(const NodeSet& a, const NodeSet& b);
bool intersects(const NodeSet& a, const NodeSet& b);

/// Ordered pair of disjoint node sets, each independent in its host graph.
struct Bipartition {
  NodeSet side_a;
  NodeSet side_b;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Closed walk of odd length; consecutive nodes (and last -> first) are adjacent.
struct OddCycle {
  std::vector<NodeId> nodes;
};

using EdgeInput = std::pair<std::int64_t, std::int64_t>;

/// Simple undirected graph with nonnegative integer node weights.
///
/// Immutable after construction. Adjacency lists are sorted and symmetric.
/// Graphs with at most `kBitsetMirrorLimit` nodes also carry a per-node
/// bitset mirror of the adjacency used by `adjacent`.
class WeightedGraph {
 public:
  static constexpr std::size_t kBitsetMirrorLimit = 512;

  WeightedGraph() = default;

  /// Normalizes an edge list: duplicates and reversed pairs collapse to one edge.
  /// Throws GraphError naming the offending edge or weight.
  static WeightedGraph from_edge_list(std::size_t n, std::span<const EdgeInput> edges,
                                      std::span<const std::int64_t> weights);
  static WeightedGraph from_edge_list(std::size_t n, std::initializer_list<EdgeInput> edges,
                                      std::initializer_list<std::int64_t> weights);

  std::size_t node_count() const noexcept { return weights_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }
  NodeWeight weight(NodeId v) const { return weights_.at(v); }
  std::span<const NodeWeight> weights() const noexcept { return weights_; }
  Weight total_weight() const noexcept;

  bool adjacent(NodeId u, NodeId v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.adjacency_ == b.adjacency_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<NodeWeight> weights_;
  std::size_t edge_count_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bit_rows_;
};

std::size_t max_degree(const WeightedGraph& g);

struct InducedSubgraph {
  WeightedGraph graph;
  /// original[i] is the index in the host graph of subgraph node i.
  std::vector<NodeId> original;
};

/// G(W): nodes of W renumbered 0..|W|-1 in ascending order, with every edge of g internal to W.
InducedSubgraph induced_subgraph(const WeightedGraph& g, const NodeSet& w_set);

bool is_independent_set(const WeightedGraph& g, const NodeSet& w_set);

/// BFS 2-coloring, one component at a time. The smallest node of each
/// component goes to side_a. Returns an odd cycle if the graph is not bipartite.
std::variant<Bipartition, OddCycle> two_coloring(const WeightedGraph& g);

bool is_bipartite(const WeightedGraph& g);

Weight set_weight(const WeightedGraph& g, const NodeSet& w_set);

/// Throws InvalidSolution if some member is not a node of g.
void require_in_range(const WeightedGraph& g, const NodeSet& w_set);

}  // namespace wibsp
