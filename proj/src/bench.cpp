#include "wibsp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "wibsp/io.hpp"
#include "wibsp/pipeline.hpp"

namespace wibsp {

std::string format_ratio(Weight num, Weight den) {
  if (den == 0) return "1.000000";
  __extension__ typedef unsigned __int128 Wide;
  const Wide scaled = (Wide{num} * 2'000'000 + den) / (Wide{den} * 2);
  const auto whole = static_cast<unsigned long long>(scaled / 1'000'000);
  const auto frac = static_cast<unsigned long long>(scaled % 1'000'000);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%llu.%06llu", whole, frac);
  return buf;
}

bool meets_ratio_bound(Weight approx, Weight opt, std::size_t delta) {
  __extension__ typedef unsigned __int128 Wide;
  return Wide{approx} * (Wide{delta} + 3) >= Wide{opt} * 3;
}

std::vector<BenchInstance> load_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchInstance> out;
  for (const auto& file : files) {
    std::ifstream in(file, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    out.push_back({file.filename().string(), parse_instance(buffer.str())});
  }
  return out;
}

std::vector<BenchInstance> grid_instances(const BenchGrid& grid) {
  std::vector<BenchInstance> out;
  std::uint64_t k = 0;
  for (std::size_t n : grid.sizes) {
    for (double p : grid.probabilities) {
      for (std::size_t rep = 0; rep < grid.per_cell; ++rep, ++k) {
        GeneratorParams params;
        params.n = n;
        params.p = p;
        params.n1 = n / 2;
        params.n2 = n - n / 2;
        std::ostringstream id;
        id << family_name(grid.family) << "_n" << n << "_p" << p << "_r" << rep;
        out.push_back({id.str(), generate(grid.family, params, grid.weights, grid.seed + k)});
      }
    }
  }
  return out;
}

namespace {

BenchRow bench_one(const BenchInstance& instance, const SolverLimits& limits) {
  BenchRow row;
  row.id = instance.id;
  row.n = instance.graph.node_count();
  row.m = instance.graph.edge_count();
  row.max_degree = max_degree(instance.graph);

  const auto exact = solve_exact(instance.graph, limits);
  const auto approx = solve_approx(instance.graph);
  row.exact_weight = exact.solution.weight;
  row.exact_optimal = exact.engine.optimal;
  row.approx_weight = approx.solution.weight;
  row.ratio = format_ratio(row.approx_weight, std::max(row.exact_weight, row.approx_weight));
  if (row.exact_optimal) row.bound_ok = meets_ratio_bound(row.approx_weight, row.exact_weight, row.max_degree);
  row.search_nodes = exact.engine.stats.search_nodes;
  row.exact_ms = exact.engine.stats.elapsed_ms;
  row.approx_ms = approx.engine.stats.elapsed_ms;
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(std::span<const BenchInstance> instances, const SolverLimits& limits,
                                std::size_t jobs) {
  std::vector<BenchRow> rows(instances.size());
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(instances.size(), 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(instances.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        rows[i] = bench_one(instances[i], limits);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string bench_csv(std::span<const BenchRow> rows, bool with_timing) {
  std::ostringstream out;
  out << "instance,n,m,max_degree,exact_weight,exact_optimal,approx_weight,ratio,bound_ok,search_nodes";
  if (with_timing) out << ",exact_ms,approx_ms";
  out << '\n';
  for (const auto& row : rows) {
    out << row.id << ',' << row.n << ',' << row.m << ',' << row.max_degree << ',' << row.exact_weight << ','
        << (row.exact_optimal ? "true" : "false") << ',' << row.approx_weight << ',' << row.ratio << ','
        << (row.bound_ok ? (*row.bound_ok ? "true" : "false") : "n/a") << ',' << row.search_nodes;
    if (with_timing) {
      char buf[64];
      std::snprintf(buf, sizeof buf, ",%.3f,%.3f", row.exact_ms, row.approx_ms);
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace wibsp
