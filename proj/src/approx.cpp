#include <chrono>
#include <queue>
#include <vector>

#include "wibsp/error.hpp"
#include "wibsp/solvers.hpp"

namespace wibsp {

namespace {

using Clock = std::chrono::steady_clock;

struct Candidate {
  NodeWeight weight;
  std::uint64_t degree_plus_one;
  NodeId node;
};

// Priority order: larger w / (d + 1), then smaller index. The products stay
// below 2^64 because both factors are below 2^32.
struct WorseRatio {
  bool operator()(const Candidate& a, const Candidate& b) const {
    const std::uint64_t lhs = std::uint64_t{a.weight} * b.degree_plus_one;
    const std::uint64_t rhs = std::uint64_t{b.weight} * a.degree_plus_one;
    if (lhs != rhs) return lhs < rhs;
    return a.node > b.node;
  }
};

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

SolveResult wisp_greedy(const WeightedGraph& g) {
  const auto start = Clock::now();
  const std::size_t n = g.node_count();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  std::priority_queue<Candidate, std::vector<Candidate>, WorseRatio> queue;
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (g.weight(v) > 0) queue.push({g.weight(v), degree[v] + 1, v});
  }

  std::vector<NodeId> chosen;
  Weight total = 0;
  auto remove = [&](NodeId u) {
    removed[u] = true;
    for (NodeId x : g.neighbors(u)) {
      if (removed[x]) continue;
      --degree[x];
      if (g.weight(x) > 0) queue.push({g.weight(x), degree[x] + 1, x});
    }
  };

  while (!queue.empty()) {
    const Candidate top = queue.top();
    queue.pop();
    // Entries go stale when the node is removed or its degree drops.
    if (removed[top.node] || top.degree_plus_one != degree[top.node] + 1) continue;
    chosen.push_back(top.node);
    total += top.weight;
    remove(top.node);
    for (NodeId u : g.neighbors(top.node))
      if (!removed[u]) remove(u);
  }

  SolveResult out;
  out.solution = NodeSet(std::move(chosen));
  out.weight = total;
  out.optimal = false;
  out.stats.elapsed_ms = millis_since(start);
  return out;
}

SolveResult wisp_local_search(const WeightedGraph& g, const NodeSet& start_set) {
  const auto start = Clock::now();
  if (!is_independent_set(g, start_set)) throw InvalidSolution("start set is not independent");

  const std::size_t n = g.node_count();
  std::vector<bool> in(n, false);
  // tight[v] = number of solution nodes adjacent to v
  std::vector<std::size_t> tight(n, 0);
  Weight total = 0;
  SolveStats stats;

  auto add = [&](NodeId v) {
    in[v] = true;
    total += g.weight(v);
    for (NodeId u : g.neighbors(v)) ++tight[u];
  };
  auto drop = [&](NodeId v) {
    in[v] = false;
    total -= g.weight(v);
    for (NodeId u : g.neighbors(v)) --tight[u];
  };
  for (NodeId v : start_set) add(v);

  // Best replacement for x among its 1-tight neighbors: one node, or two
  // non-adjacent ones. Returns the replacement weight and fills picks.
  auto best_replacement = [&](NodeId x, std::vector<NodeId>& picks) {
    std::vector<NodeId> free_nodes;
    for (NodeId u : g.neighbors(x))
      if (!in[u] && tight[u] == 1 && g.weight(u) > 0) free_nodes.push_back(u);
    Weight best = 0;
    picks.clear();
    for (std::size_t i = 0; i < free_nodes.size(); ++i) {
      const NodeId a = free_nodes[i];
      if (g.weight(a) > best) {
        best = g.weight(a);
        picks = {a};
      }
      for (std::size_t j = i + 1; j < free_nodes.size(); ++j) {
        const NodeId b = free_nodes[j];
        const Weight pair = Weight{g.weight(a)} + g.weight(b);
        if (pair > best && !g.adjacent(a, b)) {
          best = pair;
          picks = {a, b};
        }
      }
    }
    return best;
  };

  std::vector<NodeId> picks;
  for (bool moved = true; moved;) {
    moved = false;
    for (NodeId v = 0; v < n; ++v) {
      if (!in[v] && tight[v] == 0 && g.weight(v) > 0) {
        add(v);
        ++stats.local_search_moves;
        moved = true;
      }
    }
    for (NodeId x = 0; x < n; ++x) {
      if (!in[x]) continue;
      if (best_replacement(x, picks) > g.weight(x)) {
        drop(x);
        for (NodeId u : picks) add(u);
        ++stats.local_search_moves;
        moved = true;
        break;
      }
    }
  }

  std::vector<NodeId> members;
  for (NodeId v = 0; v < n; ++v)
    if (in[v]) members.push_back(v);
  SolveResult out;
  out.solution = NodeSet(std::move(members));
  out.weight = total;
  out.optimal = false;
  out.stats = stats;
  out.stats.elapsed_ms = millis_since(start);
  return out;
}

}  // namespace wibsp
