#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wibsp/generate.hpp"
#include "wibsp/graph.hpp"
#include "wibsp/solvers.hpp"

namespace wibsp {

struct BenchInstance {
  std::string id;
  WeightedGraph graph;
};

struct BenchRow {
  std::string id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  Weight exact_weight = 0;
  bool exact_optimal = false;
  Weight approx_weight = 0;
  /// approx / max(exact, approx), rounded half-up to 6 decimals.
  std::string ratio;
  /// approx >= 3/(max_degree+3) * exact; only known when exact is optimal.
  std::optional<bool> bound_ok;
  std::uint64_t search_nodes = 0;
  double exact_ms = 0.0;
  double approx_ms = 0.0;
};

/// num/den as a decimal with 6 places, rounded half-up, computed in integers.
std::string format_ratio(Weight num, Weight den);

/// approx * (delta + 3) >= 3 * opt, exactly.
bool meets_ratio_bound(Weight approx, Weight opt, std::size_t delta);

/// Regular files of dir sorted by name; the id is the file name.
std::vector<BenchInstance> load_corpus(const std::filesystem::path& dir);

struct BenchGrid {
  Family family = Family::gnp;
  std::vector<std::size_t> sizes{10, 14, 18};
  std::vector<double> probabilities{0.2, 0.5};
  std::size_t per_cell = 3;
  WeightRange weights;
  std::uint64_t seed = 1;
};

/// Instance k of the grid (in size-major, probability, repetition order) uses seed + k.
std::vector<BenchInstance> grid_instances(const BenchGrid& grid);

/// Runs both pipelines on every instance; rows come back in input order
/// regardless of the number of worker threads.
std::vector<BenchRow> run_bench(std::span<const BenchInstance> instances, const SolverLimits& limits,
                                std::size_t jobs = 1);

/// One header line plus one line per row. Timing columns are last.
std::string bench_csv(std::span<const BenchRow> rows, bool with_timing = true);

}  // namespace wibsp
