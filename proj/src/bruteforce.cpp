#include <bit>
#include <chrono>
#include <string>
#include <variant>
#include <vector>

#include "wibsp/error.hpp"
#include "wibsp/solvers.hpp"

namespace wibsp {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

// Compares the ascending member lists of two masks lexicographically.
bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const int d = std::countr_zero(a ^ b);
  // Below d both agree; whichever owns d continues with d while the other
  // continues with something larger, or stops (and is then a prefix).
  if ((a >> d) & 1U) return (b >> d) != 0;
  return (a >> d) == 0;
}

NodeSet to_node_set(Mask m) {
  std::vector<NodeId> out;
  for (; m != 0; m &= m - 1) out.push_back(static_cast<NodeId>(std::countr_zero(m)));
  return NodeSet(std::move(out));
}

void require_enumerable(const WeightedGraph& g, const SolverLimits& limits, std::size_t hard_cap,
                        const char* engine) {
  limits.validate();
  const std::size_t cap = std::min(limits.max_nodes_for_bruteforce, hard_cap);
  if (g.node_count() > cap) {
    throw SolverRefusal(std::string(engine) + " refuses " + std::to_string(g.node_count()) +
                        " nodes (limit " + std::to_string(cap) + ")");
  }
}

class IndependentSetEnumerator {
 public:
  explicit IndependentSetEnumerator(const WeightedGraph& g) : g_(g), n_(g.node_count()) {
    neighbors_.assign(n_, 0);
    for (NodeId v = 0; v < n_; ++v)
      for (NodeId u : g.neighbors(v)) neighbors_[v] |= Mask{1} << u;
    suffix_.assign(n_ + 1, 0);
    for (std::size_t i = n_; i-- > 0;) suffix_[i] = suffix_[i + 1] + g.weight(static_cast<NodeId>(i));
  }

  void run() { visit(0, 0, 0, 0); }

  Mask best() const { return best_; }
  Weight best_weight() const { return best_weight_; }
  std::uint64_t visited() const { return visited_; }

 private:
  void visit(std::size_t i, Mask blocked, Mask chosen, Weight weight) {
    ++visited_;
    if (weight + suffix_[i] < best_weight_) return;
    if (i == n_) {
      if (weight > best_weight_ || lex_less(chosen, best_)) {
        best_weight_ = weight;
        best_ = chosen;
      }
      return;
    }
    const Mask bit = Mask{1} << i;
    const NodeWeight w = g_.weight(static_cast<NodeId>(i));
    if (!(blocked & bit) && w > 0) visit(i + 1, blocked | neighbors_[i], chosen | bit, weight + w);
    visit(i + 1, blocked, chosen, weight);
  }

  const WeightedGraph& g_;
  std::size_t n_;
  std::vector<Mask> neighbors_;
  std::vector<Weight> suffix_;
  Mask best_ = 0;
  Weight best_weight_ = 0;
  std::uint64_t visited_ = 0;
};

}  // namespace

SolveResult wisp_bruteforce(const WeightedGraph& g, const SolverLimits& limits) {
  require_enumerable(g, limits, 64, "wisp_bruteforce");
  const auto start = Clock::now();
  IndependentSetEnumerator enumerator(g);
  enumerator.run();

  SolveResult out;
  out.solution = to_node_set(enumerator.best());
  out.weight = enumerator.best_weight();
  out.optimal = true;
  out.stats.search_nodes = enumerator.visited();
  out.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return out;
}

LiftedSolution wibsp_bruteforce(const WeightedGraph& g, const SolverLimits& limits) {
  require_enumerable(g, limits, 63, "wibsp_bruteforce");
  const std::size_t n = g.node_count();

  Mask zero_weight = 0;
  for (NodeId v = 0; v < n; ++v)
    if (g.weight(v) == 0) zero_weight |= Mask{1} << v;

  Mask best = 0;
  Weight best_weight = 0;
  const Mask end = Mask{1} << n;
  for (Mask m = 1; m < end; ++m) {
    if (m & zero_weight) continue;
    Weight w = 0;
    for (Mask rest = m; rest != 0; rest &= rest - 1) w += g.weight(static_cast<NodeId>(std::countr_zero(rest)));
    if (w < best_weight || (w == best_weight && !lex_less(m, best))) continue;
    if (is_bipartite(induced_subgraph(g, to_node_set(m)).graph)) {
      best = m;
      best_weight = w;
    }
  }

  LiftedSolution out;
  out.node_set = to_node_set(best);
  out.weight = best_weight;
  const auto sub = induced_subgraph(g, out.node_set);
  const auto coloring = std::get<Bipartition>(two_coloring(sub.graph));
  std::vector<NodeId> side_a;
  std::vector<NodeId> side_b;
  for (NodeId v : coloring.side_a) side_a.push_back(sub.original[v]);
  for (NodeId v : coloring.side_b) side_b.push_back(sub.original[v]);
  out.bipartition = {NodeSet(std::move(side_a)), NodeSet(std::move(side_b))};
  return out;
}

}  // namespace wibsp
