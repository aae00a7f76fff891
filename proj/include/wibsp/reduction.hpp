#pragma once

#include <optional>
#include <string>

#include "wibsp/graph.hpp"

namespace wibsp {

enum class Layer { first, second };

/// The doubled graph H(G): two copies of G joined by the perfect matching
/// {i, n+i}. Node i of G appears as i in the first layer and n+i in the second.
class ReducedGraph {
 public:
  ReducedGraph(WeightedGraph h, std::size_t source_node_count)
      : h_(std::move(h)), source_node_count_(source_node_count) {}

  const WeightedGraph& h() const noexcept { return h_; }
  std::size_t source_node_count() const noexcept { return source_node_count_; }

  NodeId first_copy(NodeId base) const noexcept { return base; }
  NodeId second_copy(NodeId base) const noexcept { return static_cast<NodeId>(source_node_count_ + base); }
  Layer layer(NodeId v) const noexcept { return v < source_node_count_ ? Layer::first : Layer::second; }
  NodeId base(NodeId v) const noexcept {
    return v < source_node_count_ ? v : static_cast<NodeId>(v - source_node_count_);
  }

 private:
  WeightedGraph h_;
  std::size_t source_node_count_;
};

/// A bipartite node set of G together with the bipartition that witnesses it.
struct LiftedSolution {
  NodeSet node_set;
  Bipartition bipartition;
  Weight weight = 0;

  friend bool operator==(const LiftedSolution&, const LiftedSolution&) = default;
};

ReducedGraph build_h(const WeightedGraph& g);

/// Independent set of H(G) -> bipartite node set of G with equal weight.
/// Throws InvalidSolution unless w_i is independent in H(G).
LiftedSolution lift_independent_set(const ReducedGraph& r, const WeightedGraph& g, const NodeSet& w_i);

/// Bipartite node set of G -> independent set of H(G): side_a goes to the
/// first layer, side_b to the second. Throws InvalidSolution naming the
/// violated condition.
NodeSet project_bipartite(const ReducedGraph& r, const WeightedGraph& g, const LiftedSolution& sol);

/// First violated LiftedSolution invariant against g, or nullopt if valid.
std::optional<std::string> find_violation(const WeightedGraph& g, const LiftedSolution& sol);

}  // namespace wibsp
