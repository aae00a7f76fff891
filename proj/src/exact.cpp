#include <chrono>
#include <stdexcept>
#include <string>

#include "node_bits.hpp"
#include "wibsp/solvers.hpp"

namespace wibsp {

using detail::NodeBits;

void SolverLimits::validate() const {
  if (node_budget && *node_budget == 0) throw std::invalid_argument("search-node budget must be positive");
  if (time_budget && time_budget->count() <= 0) throw std::invalid_argument("time budget must be positive");
}

namespace {

using Clock = std::chrono::steady_clock;

class BranchAndReduce {
 public:
  BranchAndReduce(const WeightedGraph& g, const SolverLimits& limits)
      : g_(g), limits_(limits), nbr_(detail::neighborhood_bits(g)), start_(Clock::now()) {}

  SolveResult run() {
    const std::size_t n = g_.node_count();

    const SolveResult seed = wisp_greedy(g_);
    best_weight_ = seed.weight;
    best_ = NodeBits(n);
    for (NodeId v : seed.solution) best_.set(v);

    NodeBits remaining(n);
    for (NodeId v = 0; v < n; ++v) {
      if (g_.weight(v) == 0) {
        ++stats_.zero_weight_reductions;
      } else {
        remaining.set(v);
      }
    }
    search(std::move(remaining), NodeBits(n), 0);

    SolveResult out;
    out.solution = NodeSet(best_.to_vector());
    out.weight = best_weight_;
    out.optimal = !aborted_;
    out.stats = stats_;
    out.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return out;
  }

 private:
  bool out_of_budget() {
    if (limits_.node_budget && stats_.search_nodes > *limits_.node_budget) return true;
    if (limits_.time_budget && stats_.search_nodes % 1024 == 1 && Clock::now() - start_ > *limits_.time_budget) {
      return true;
    }
    return false;
  }

  void take(NodeId v, NodeBits& remaining, NodeBits& chosen, Weight& weight) const {
    chosen.set(v);
    weight += g_.weight(v);
    remaining.reset(v);
    remaining.subtract(nbr_[v]);
  }

  // Neighborhood-weight domination to fixpoint.
  void reduce(NodeBits& remaining, NodeBits& chosen, Weight& weight) {
    bool changed = true;
    while (changed) {
      changed = false;
      remaining.for_each([&](NodeId v) {
        if (!remaining.test(v)) return;
        Weight around = 0;
        NodeBits::for_each_common(nbr_[v], remaining, [&](NodeId u) { around += g_.weight(u); });
        if (g_.weight(v) >= around) {
          take(v, remaining, chosen, weight);
          ++stats_.domination_reductions;
          changed = true;
        }
      });
    }
  }

  // Greedy clique cover in ascending index order; each clique contributes its heaviest node.
  Weight clique_cover_bound(const NodeBits& remaining) {
    std::size_t used = 0;
    remaining.for_each([&](NodeId v) {
      for (std::size_t c = 0; c < used; ++c) {
        if (cliques_[c].common.test(v)) {
          cliques_[c].common &= nbr_[v];
          cliques_[c].heaviest = std::max<Weight>(cliques_[c].heaviest, g_.weight(v));
          return;
        }
      }
      if (used == cliques_.size()) cliques_.emplace_back();
      cliques_[used].common.assign_and(nbr_[v], remaining);
      cliques_[used].heaviest = g_.weight(v);
      ++used;
    });
    Weight bound = 0;
    for (std::size_t c = 0; c < used; ++c) bound += cliques_[c].heaviest;
    return bound;
  }

  NodeId branch_node(const NodeBits& remaining) const {
    NodeId pick = 0;
    std::size_t pick_degree = 0;
    NodeWeight pick_weight = 0;
    bool first = true;
    remaining.for_each([&](NodeId v) {
      const std::size_t d = nbr_[v].count_and(remaining);
      const NodeWeight w = g_.weight(v);
      if (first || d > pick_degree || (d == pick_degree && w > pick_weight)) {
        pick = v;
        pick_degree = d;
        pick_weight = w;
        first = false;
      }
    });
    return pick;
  }

  void search(NodeBits remaining, NodeBits chosen, Weight weight) {
    if (aborted_) return;
    ++stats_.search_nodes;
    if (out_of_budget()) {
      aborted_ = true;
      return;
    }

    reduce(remaining, chosen, weight);
    if (!remaining.any()) {
      if (weight > best_weight_) {
        best_weight_ = weight;
        best_ = std::move(chosen);
      }
      return;
    }
    if (weight + clique_cover_bound(remaining) <= best_weight_) return;

    const NodeId v = branch_node(remaining);
    {
      NodeBits with_remaining = remaining;
      NodeBits with_chosen = chosen;
      Weight with_weight = weight;
      take(v, with_remaining, with_chosen, with_weight);
      search(std::move(with_remaining), std::move(with_chosen), with_weight);
    }
    remaining.reset(v);
    search(std::move(remaining), std::move(chosen), weight);
  }

  struct Clique {
    NodeBits common;
    Weight heaviest = 0;
  };

  const WeightedGraph& g_;
  const SolverLimits& limits_;
  std::vector<NodeBits> nbr_;
  Clock::time_point start_;
  SolveStats stats_;
  bool aborted_ = false;
  Weight best_weight_ = 0;
  NodeBits best_;
  std::vector<Clique> cliques_;
};

}  // namespace

SolveResult wisp_exact(const WeightedGraph& g, const SolverLimits& limits) {
  limits.validate();
  return BranchAndReduce(g, limits).run();
}

}  // namespace wibsp
