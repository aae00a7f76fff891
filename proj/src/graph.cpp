#include "wibsp/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "wibsp/error.hpp"

namespace wibsp {

NodeSet::NodeSet(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSet::NodeSet(std::initializer_list<NodeId> members) : NodeSet(std::vector<NodeId>(members)) {}

bool NodeSet::contains(NodeId v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  std::vector<NodeId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NodeSet(std::move(out));
}

bool intersects(const NodeSet& a, const NodeSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

WeightedGraph WeightedGraph::from_edge_list(std::size_t n, std::span<const EdgeInput> edges,
                                            std::span<const std::int64_t> weights) {
  if (n > std::numeric_limits<NodeId>::max()) {
    throw GraphError("node count " + std::to_string(n) + " exceeds the index width");
  }
  if (weights.size() != n) {
    throw GraphError("expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size()));
  }

  WeightedGraph g;
  g.weights_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t w = weights[i];
    if (w < 0) {
      throw GraphError("weight of node " + std::to_string(i) + " is negative (" + std::to_string(w) + ")");
    }
    if (w > std::int64_t{std::numeric_limits<NodeWeight>::max()}) {
      throw GraphError("weight of node " + std::to_string(i) + " overflows 32 bits (" + std::to_string(w) + ")");
    }
    g.weights_.push_back(static_cast<NodeWeight>(w));
  }

  g.adjacency_.assign(n, {});
  const auto signed_n = static_cast<std::int64_t>(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [u, v] = edges[k];
    const auto label = [&] {
      return "edge " + std::to_string(k) + " (" + std::to_string(u) + ", " + std::to_string(v) + ")";
    };
    if (u < 0 || v < 0 || u >= signed_n || v >= signed_n) {
      throw GraphError(label() + ": endpoint out of range for " + std::to_string(n) + " nodes");
    }
    if (u == v) {
      throw GraphError(label() + ": self-loop");
    }
    g.adjacency_[static_cast<std::size_t>(u)].push_back(static_cast<NodeId>(v));
    g.adjacency_[static_cast<std::size_t>(v)].push_back(static_cast<NodeId>(u));
  }

  for (auto& row : g.adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    g.edge_count_ += row.size();
  }
  g.edge_count_ /= 2;

  if (n <= kBitsetMirrorLimit) {
    g.words_per_row_ = (n + 63) / 64;
    g.bit_rows_.assign(n * g.words_per_row_, 0);
    for (std::size_t v = 0; v < n; ++v) {
      for (NodeId u : g.adjacency_[v]) {
        g.bit_rows_[v * g.words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
      }
    }
  }
  return g;
}

WeightedGraph WeightedGraph::from_edge_list(std::size_t n, std::initializer_list<EdgeInput> edges,
                                            std::initializer_list<std::int64_t> weights) {
  return from_edge_list(n, std::span<const EdgeInput>(edges.begin(), edges.size()),
                        std::span<const std::int64_t>(weights.begin(), weights.size()));
}

Weight WeightedGraph::total_weight() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), Weight{0});
}

bool WeightedGraph::adjacent(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  if (!bit_rows_.empty()) {
    return (bit_rows_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U;
  }
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> WeightedGraph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t max_degree(const WeightedGraph& g) {
  std::size_t best = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

void require_in_range(const WeightedGraph& g, const NodeSet& w_set) {
  if (w_set.bound() > g.node_count()) {
    throw InvalidSolution("member out of range: node " + std::to_string(w_set.bound() - 1) +
                          " in a graph of " + std::to_string(g.node_count()) + " nodes");
  }
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, const NodeSet& w_set) {
  require_in_range(g, w_set);
  constexpr auto kAbsent = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> local(g.node_count(), kAbsent);
  InducedSubgraph out;
  out.original.assign(w_set.begin(), w_set.end());
  for (std::size_t i = 0; i < out.original.size(); ++i) local[out.original[i]] = static_cast<NodeId>(i);

  std::vector<EdgeInput> edges;
  std::vector<std::int64_t> weights;
  weights.reserve(out.original.size());
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    const NodeId u = out.original[i];
    weights.push_back(g.weight(u));
    for (NodeId v : g.neighbors(u)) {
      if (u < v && local[v] != kAbsent) edges.emplace_back(i, local[v]);
    }
  }
  out.graph = WeightedGraph::from_edge_list(out.original.size(), edges, weights);
  return out;
}

bool is_independent_set(const WeightedGraph& g, const NodeSet& w_set) {
  require_in_range(g, w_set);
  for (NodeId u : w_set) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && w_set.contains(v)) return false;
    }
  }
  return true;
}

std::variant<Bipartition, OddCycle> two_coloring(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  constexpr std::int8_t kUncolored = -1;
  std::vector<std::int8_t> color(n, kUncolored);
  std::vector<NodeId> parent(n);
  std::vector<std::size_t> depth(n, 0);
  std::vector<NodeId> side_a;
  std::vector<NodeId> side_b;

  for (NodeId root = 0; root < n; ++root) {
    if (color[root] != kUncolored) continue;
    color[root] = 0;
    parent[root] = root;
    std::queue<NodeId> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop();
      (color[u] == 0 ? side_a : side_b).push_back(u);
      for (NodeId v : g.neighbors(u)) {
        if (color[v] == kUncolored) {
          color[v] = static_cast<std::int8_t>(1 - color[u]);
          parent[v] = u;
          depth[v] = depth[u] + 1;
          frontier.push(v);
        } else if (color[v] == color[u]) {
          // Same color means equal depth parity, so the tree paths to the
          // common ancestor plus edge {u, v} close an odd cycle.
          std::vector<NodeId> up_u{u};
          std::vector<NodeId> up_v{v};
          NodeId a = u;
          NodeId b = v;
          while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
          while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
          while (a != b) {
            up_u.push_back(a = parent[a]);
            up_v.push_back(b = parent[b]);
          }
          up_v.pop_back();  // ancestor already ends up_u
          OddCycle cycle;
          cycle.nodes = std::move(up_u);
          cycle.nodes.insert(cycle.nodes.end(), up_v.rbegin(), up_v.rend());
          return cycle;
        }
      }
    }
  }
  return Bipartition{NodeSet(std::move(side_a)), NodeSet(std::move(side_b))};
}

bool is_bipartite(const WeightedGraph& g) { return std::holds_alternative<Bipartition>(two_coloring(g)); }

Weight set_weight(const WeightedGraph& g, const NodeSet& w_set) {
  require_in_range(g, w_set);
  Weight total = 0;
  for (NodeId v : w_set) total += g.weight(v);
  return total;
}

}  // namespace wibsp
