#include "wibsp/io.hpp"

#include <charconv>
#include <limits>
#include <optional>
#include <vector>

#include "json.hpp"
#include "wibsp/error.hpp"

namespace wibsp {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t begin = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > begin) out.push_back(line.substr(begin, i - begin));
  }
  return out;
}

std::int64_t to_integer(std::string_view token, std::size_t line, const char* what) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

WeightedGraph parse_instance(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t declared_edges = 0;
  std::vector<std::int64_t> weights;
  std::vector<bool> weight_seen;
  std::vector<EdgeInput> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view line = text.substr(pos, next - pos);
    pos = next + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    const std::string_view kind = tokens[0];

    if (kind == "p") {
      if (n) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "edge") throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      const auto nodes = to_integer(tokens[2], line_no, "node count");
      const auto count = to_integer(tokens[3], line_no, "edge count");
      if (nodes < 0 || nodes > std::int64_t{std::numeric_limits<NodeId>::max()}) {
        throw ParseError(line_no, "node count out of range");
      }
      if (count < 0) throw ParseError(line_no, "negative edge count");
      n = static_cast<std::size_t>(nodes);
      declared_edges = static_cast<std::size_t>(count);
      weights.assign(*n, 1);
      weight_seen.assign(*n, false);
      continue;
    }
    if (!n) throw ParseError(line_no, "'" + std::string(kind) + "' line before the 'p edge' header");

    const auto signed_n = static_cast<std::int64_t>(*n);
    if (kind == "v") {
      if (tokens.size() != 3) throw ParseError(line_no, "malformed weight line, expected 'v <id> <weight>'");
      const auto id = to_integer(tokens[1], line_no, "node id");
      const auto w = to_integer(tokens[2], line_no, "weight");
      if (id < 1 || id > signed_n) throw ParseError(line_no, "node id " + std::to_string(id) + " out of range");
      if (w < 0) throw ParseError(line_no, "negative weight " + std::to_string(w));
      if (w > std::int64_t{std::numeric_limits<NodeWeight>::max()}) {
        throw ParseError(line_no, "weight " + std::to_string(w) + " overflows 32 bits");
      }
      const auto index = static_cast<std::size_t>(id - 1);
      if (weight_seen[index]) throw ParseError(line_no, "duplicate weight for node " + std::to_string(id));
      weight_seen[index] = true;
      weights[index] = w;
    } else if (kind == "e") {
      if (tokens.size() != 3) throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      const auto u = to_integer(tokens[1], line_no, "endpoint");
      const auto v = to_integer(tokens[2], line_no, "endpoint");
      if (u < 1 || u > signed_n || v < 1 || v > signed_n) {
        throw ParseError(line_no, "endpoint out of range in edge " + std::to_string(u) + " " + std::to_string(v));
      }
      if (u == v) throw ParseError(line_no, "self-loop on node " + std::to_string(u));
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
    }
  }

  if (!n) throw ParseError(line_no, "missing 'p edge' header");
  if (edges.size() != declared_edges) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return WeightedGraph::from_edge_list(*n, edges, weights);
}

std::string write_instance(const WeightedGraph& g) {
  std::string out = "p edge " + std::to_string(g.node_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out += "v " + std::to_string(v + std::size_t{1}) + " " + std::to_string(g.weight(v)) + "\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out += "e " + std::to_string(u + std::size_t{1}) + " " + std::to_string(v + std::size_t{1}) + "\n";
  }
  return out;
}

namespace {

using Json = nlohmann::ordered_json;

Json one_based(const NodeSet& s) {
  Json out = Json::array();
  for (NodeId v : s) out.push_back(std::uint64_t{v} + 1);
  return out;
}

NodeSet zero_based(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw InvalidSolution(std::string("solution field '") + key + "' missing or not an array");
  }
  std::vector<NodeId> ids;
  for (const auto& item : doc[key]) {
    if (!item.is_number_integer()) throw InvalidSolution(std::string("non-integer id in '") + key + "'");
    const auto id = item.get<std::int64_t>();
    if (id < 1 || id > std::int64_t{std::numeric_limits<NodeId>::max()}) {
      throw InvalidSolution("member out of range");
    }
    ids.push_back(static_cast<NodeId>(id - 1));
  }
  const std::size_t listed = ids.size();
  NodeSet set(std::move(ids));
  if (set.size() != listed) throw InvalidSolution(std::string("duplicate member in '") + key + "'");
  return set;
}

}  // namespace

std::string write_solution(const SolutionRecord& record) {
  Json doc;
  doc["weight"] = record.solution.weight;
  doc["optimal"] = record.optimal;
  doc["nodes"] = one_based(record.solution.node_set);
  doc["side_a"] = one_based(record.solution.bipartition.side_a);
  doc["side_b"] = one_based(record.solution.bipartition.side_b);
  Json stats;
  stats["engine"] = record.engine;
  stats["search_nodes"] = record.stats.search_nodes;
  stats["domination_reductions"] = record.stats.domination_reductions;
  stats["zero_weight_reductions"] = record.stats.zero_weight_reductions;
  stats["local_search_moves"] = record.stats.local_search_moves;
  stats["elapsed_ms"] = record.stats.elapsed_ms;
  doc["stats"] = std::move(stats);
  return doc.dump(2) + "\n";
}

SolutionRecord parse_solution(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidSolution(std::string("solution is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidSolution("solution document is not an object");
  if (!doc.contains("weight") || !doc["weight"].is_number_unsigned()) {
    throw InvalidSolution("solution field 'weight' missing or not a nonnegative integer");
  }

  SolutionRecord record;
  record.solution.weight = doc["weight"].get<Weight>();
  record.solution.node_set = zero_based(doc, "nodes");
  record.solution.bipartition = {zero_based(doc, "side_a"), zero_based(doc, "side_b")};
  if (doc.contains("optimal")) {
    if (!doc["optimal"].is_boolean()) throw InvalidSolution("solution field 'optimal' is not a boolean");
    record.optimal = doc["optimal"].get<bool>();
  }
  if (doc.contains("stats") && doc["stats"].is_object()) {
    const auto& stats = doc["stats"];
    try {
      record.engine = stats.value("engine", std::string{});
      record.stats.search_nodes = stats.value("search_nodes", std::uint64_t{0});
      record.stats.domination_reductions = stats.value("domination_reductions", std::uint64_t{0});
      record.stats.zero_weight_reductions = stats.value("zero_weight_reductions", std::uint64_t{0});
      record.stats.local_search_moves = stats.value("local_search_moves", std::uint64_t{0});
      record.stats.elapsed_ms = stats.value("elapsed_ms", 0.0);
    } catch (const Json::exception& e) {
      throw InvalidSolution(std::string("malformed stats: ") + e.what());
    }
  }
  return record;
}

}  // namespace wibsp
