#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "wibsp/graph.hpp"

namespace wibsp {

enum class Family { gnp, cycle, complete, star, bipartite_random };

/// Accepts "gnp", "cycle", "complete", "star", "bipartite-random".
Family parse_family(std::string_view name);
std::string family_name(Family family);

struct GeneratorParams {
  /// Node count for gnp, cycle, complete and star (star: node 0 is the center).
  std::size_t n = 0;
  /// Edge probability for gnp and bipartite-random.
  double p = 0.5;
  /// Part sizes for bipartite-random; part one is nodes 0..n1-1.
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

/// Node weights drawn uniformly from [lo, hi]; lo = hi = 1 is the unweighted case.
struct WeightRange {
  std::int64_t lo = 1;
  std::int64_t hi = 100;

  static WeightRange unit() { return {1, 1}; }
  /// "unit" or "<lo>:<hi>".
  static WeightRange parse(std::string_view text);
};

/// Deterministic for a given seed. Weights are drawn first, then edges in
/// lexicographic pair order. Throws std::invalid_argument on bad parameters.
WeightedGraph generate(Family family, const GeneratorParams& params, const WeightRange& weights, std::uint64_t seed);

}  // namespace wibsp
