#include "wibsp/generate.hpp"

#include <charconv>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace wibsp {

namespace {

// Distribution helpers over raw mt19937_64 output, so the streams do not
// depend on the standard library's distribution implementations.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}

  bool bernoulli(double p) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
  }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "gnp") return Family::gnp;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "star") return Family::star;
  if (name == "bipartite-random") return Family::bipartite_random;
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::gnp: return "gnp";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::bipartite_random: return "bipartite-random";
  }
  return "unknown";
}

WeightRange WeightRange::parse(std::string_view text) {
  if (text == "unit") return unit();
  const auto colon = text.find(':');
  WeightRange out;
  auto read = [&](std::string_view part, std::int64_t& value) {
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    return ec == std::errc{} && end == part.data() + part.size();
  };
  if (colon == std::string_view::npos || !read(text.substr(0, colon), out.lo) || !read(text.substr(colon + 1), out.hi)) {
    throw std::invalid_argument("weight range must be 'unit' or '<lo>:<hi>', got '" + std::string(text) + "'");
  }
  return out;
}

WeightedGraph generate(Family family, const GeneratorParams& params, const WeightRange& weights, std::uint64_t seed) {
  if (weights.lo < 0 || weights.hi < weights.lo || weights.hi > std::int64_t{std::numeric_limits<NodeWeight>::max()}) {
    throw std::invalid_argument("weight range must satisfy 0 <= lo <= hi <= 2^32-1");
  }
  const bool random_edges = family == Family::gnp || family == Family::bipartite_random;
  if (random_edges && !(params.p >= 0.0 && params.p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }

  const std::size_t n = family == Family::bipartite_random ? params.n1 + params.n2 : params.n;
  if (family == Family::cycle && n != 0 && n < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
  if (family == Family::star && n == 0) throw std::invalid_argument("star needs a center node");
  if (n > std::numeric_limits<NodeId>::max() / 2) throw std::invalid_argument("node count too large");

  Draws draws(seed);
  std::vector<std::int64_t> w(n);
  for (auto& x : w) x = draws.uniform(weights.lo, weights.hi);

  std::vector<EdgeInput> edges;
  switch (family) {
    case Family::gnp:
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (draws.bernoulli(params.p)) edges.emplace_back(u, v);
      break;
    case Family::cycle:
      for (std::size_t u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
      break;
    case Family::complete:
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case Family::star:
      for (std::size_t v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Family::bipartite_random:
      for (std::size_t u = 0; u < params.n1; ++u)
        for (std::size_t v = params.n1; v < n; ++v)
          if (draws.bernoulli(params.p)) edges.emplace_back(u, v);
      break;
  }
  return WeightedGraph::from_edge_list(n, edges, w);
}

}  // namespace wibsp
