#include "wibsp/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wibsp/bench.hpp"
#include "wibsp/error.hpp"
#include "wibsp/generate.hpp"
#include "wibsp/io.hpp"
#include "wibsp/pipeline.hpp"
#include "wibsp/reduction.hpp"

namespace wibsp {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

WeightedGraph read_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const GraphError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Writes to the named file, or to out when the name is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

std::string one_based_list(const NodeSet& s) {
  std::string out;
  for (NodeId v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + std::size_t{1});
  }
  return out;
}

SolverLimits make_limits(std::optional<std::uint64_t> nodes, std::optional<std::int64_t> ms) {
  SolverLimits limits;
  limits.node_budget = nodes;
  if (ms) limits.time_budget = std::chrono::milliseconds(*ms);
  try {
    limits.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return limits;
}

struct GenOptions {
  std::string family;
  GeneratorParams params;
  std::uint64_t seed = 1;
  std::string weights = "1:100";
  std::string output;
};

struct SolveOptions {
  std::string instance;
  std::string engine = "exact";
  std::optional<std::uint64_t> budget_nodes;
  std::optional<std::int64_t> budget_ms;
  std::size_t max_bruteforce = SolverLimits::kDefaultWibspBruteforceNodes;
  bool json = false;
  std::string output;
};

struct BenchOptions {
  std::string corpus;
  std::string family = "gnp";
  std::vector<std::size_t> sizes{10, 14, 18};
  std::vector<double> probabilities{0.2, 0.5};
  std::size_t per_cell = 3;
  std::string weights = "1:100";
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<std::int64_t> budget_ms;
  std::size_t jobs = 1;
  bool no_timing = false;
  std::string output;
};

int run_gen(const GenOptions& opt, std::ostream& out) {
  WeightedGraph g;
  try {
    g = generate(parse_family(opt.family), opt.params, WeightRange::parse(opt.weights), opt.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(write_instance(g), opt.output, out);
  return kExitOk;
}

int run_reduce(const std::string& instance, const std::string& output, std::ostream& out) {
  const auto g = read_instance(instance);
  emit(write_instance(build_h(g).h()), output, out);
  return kExitOk;
}

int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  const auto g = read_instance(opt.instance);
  SolutionRecord record;
  record.engine = opt.engine;
  if (opt.engine == "exact") {
    auto result = solve_exact(g, make_limits(opt.budget_nodes, opt.budget_ms));
    record.solution = std::move(result.solution);
    record.optimal = result.engine.optimal;
    record.stats = result.engine.stats;
  } else if (opt.engine == "approx") {
    auto result = solve_approx(g);
    record.solution = std::move(result.solution);
    record.optimal = false;
    record.stats = result.engine.stats;
  } else {
    const auto start = std::chrono::steady_clock::now();
    SolverLimits limits;
    limits.max_nodes_for_bruteforce = opt.max_bruteforce;
    try {
      record.solution = wibsp_bruteforce(g, limits);
    } catch (const SolverRefusal& e) {
      err << "solve: " << e.what() << '\n';
      return kExitFailure;
    }
    record.optimal = true;
    record.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  std::string text;
  if (opt.json) {
    text = write_solution(record);
  } else {
    std::ostringstream s;
    s << "engine: " << record.engine << '\n'
      << "weight: " << record.solution.weight << '\n'
      << "optimal: " << (record.optimal ? "true" : "false") << '\n'
      << "oct_weight: " << oct_weight(g, record.solution) << '\n'
      << "nodes: " << one_based_list(record.solution.node_set) << '\n'
      << "side_a: " << one_based_list(record.solution.bipartition.side_a) << '\n'
      << "side_b: " << one_based_list(record.solution.bipartition.side_b) << '\n'
      << "search_nodes: " << record.stats.search_nodes << '\n'
      << "elapsed_ms: " << record.stats.elapsed_ms << '\n';
    text = s.str();
  }
  emit(text, opt.output, out);
  if (opt.engine == "exact" && !record.optimal) {
    err << "solve: budget exhausted, best solution found so far was written\n";
    return kExitBudget;
  }
  return kExitOk;
}

int run_verify(const std::string& instance, const std::string& solution, std::ostream& out) {
  const auto g = read_instance(instance);
  const auto text = read_file(solution);
  SolutionRecord record;
  try {
    record = parse_solution(text);
  } catch (const InvalidSolution& e) {
    out << "invalid: " << e.what() << '\n';
    return kExitFailure;
  }
  if (const auto check = verify(g, record.solution); !check) {
    out << "invalid: " << check.diagnostic << '\n';
    return kExitFailure;
  }
  out << "valid: weight " << record.solution.weight << ", oct_weight " << oct_weight(g, record.solution) << '\n';
  return kExitOk;
}

int run_bench_command(const BenchOptions& opt, std::ostream& out) {
  std::vector<BenchInstance> instances;
  try {
    if (!opt.corpus.empty()) {
      instances = load_corpus(opt.corpus);
    } else {
      BenchGrid grid;
      grid.family = parse_family(opt.family);
      grid.sizes = opt.sizes;
      grid.probabilities = opt.probabilities;
      grid.per_cell = opt.per_cell;
      grid.weights = WeightRange::parse(opt.weights);
      grid.seed = opt.seed;
      instances = grid_instances(grid);
    }
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    throw UsageError(e.what());
  }

  const auto rows = run_bench(instances, make_limits(opt.budget_nodes, opt.budget_ms), opt.jobs);
  emit(bench_csv(rows, !opt.no_timing), opt.output, out);
  bool exhausted = false;
  for (const auto& row : rows) {
    if (row.bound_ok && !*row.bound_ok) return kExitFailure;
    exhausted = exhausted || !row.exact_optimal;
  }
  return exhausted ? kExitBudget : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum-weight induced bipartite subgraph solver via the doubled-graph reduction"};
  app.name("wibsp");
  app.require_subcommand(1);
  std::function<int()> action;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random or structured instance");
  gen_cmd->add_option("family", gen.family, "gnp | cycle | complete | star | bipartite-random")->required();
  gen_cmd->add_option("--n", gen.params.n, "Node count (star: center plus n-1 leaves)");
  gen_cmd->add_option("--p", gen.params.p, "Edge probability");
  gen_cmd->add_option("--n1", gen.params.n1, "First part size (bipartite-random)");
  gen_cmd->add_option("--n2", gen.params.n2, "Second part size (bipartite-random)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--weights", gen.weights, "'unit' or '<lo>:<hi>'")->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");
  gen_cmd->callback([&] { action = [&] { return run_gen(gen, out); }; });

  std::string reduce_input;
  std::string reduce_output;
  auto* reduce_cmd = app.add_subcommand("reduce", "Write the doubled graph H(G) as an instance file");
  reduce_cmd->add_option("instance", reduce_input, "Instance file")->required();
  reduce_cmd->add_option("-o,--output", reduce_output, "Output file (default stdout)");
  reduce_cmd->callback([&] { action = [&] { return run_reduce(reduce_input, reduce_output, out); }; });

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Find a maximum-weight induced bipartite subgraph");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--engine", solve.engine, "exact | approx | bruteforce")
      ->check(CLI::IsMember({"exact", "approx", "bruteforce"}))
      ->capture_default_str();
  solve_cmd->add_option("--budget-nodes", solve.budget_nodes, "Search-node budget for the exact engine");
  solve_cmd->add_option("--budget-ms", solve.budget_ms, "Time budget in milliseconds for the exact engine");
  solve_cmd->add_option("--max-bruteforce", solve.max_bruteforce, "Node guard for the bruteforce engine")
      ->capture_default_str();
  solve_cmd->add_flag("--json", solve.json, "Write the solution as JSON");
  solve_cmd->add_option("-o,--output", solve.output, "Output file (default stdout)");
  solve_cmd->callback([&] { action = [&] { return run_solve(solve, out, err); }; });

  std::string verify_instance;
  std::string verify_solution;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution JSON against an instance");
  verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
  verify_cmd->add_option("solution", verify_solution, "Solution JSON file")->required();
  verify_cmd->callback([&] { action = [&] { return run_verify(verify_instance, verify_solution, out); }; });

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run both pipelines over a corpus or generator grid, CSV out");
  bench_cmd->add_option("--corpus", bench.corpus, "Directory of instance files (overrides the grid)");
  bench_cmd->add_option("--family", bench.family, "Grid family")->capture_default_str();
  bench_cmd->add_option("--sizes", bench.sizes, "Grid node counts")->delimiter(',');
  bench_cmd->add_option("--p", bench.probabilities, "Grid edge probabilities")->delimiter(',');
  bench_cmd->add_option("--per-cell", bench.per_cell, "Instances per (size, p) cell")->capture_default_str();
  bench_cmd->add_option("--weights", bench.weights, "'unit' or '<lo>:<hi>'")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Base seed")->capture_default_str();
  bench_cmd->add_option("--budget-nodes", bench.budget_nodes, "Search-node budget per exact solve");
  bench_cmd->add_option("--budget-ms", bench.budget_ms, "Time budget per exact solve");
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Omit the timing columns");
  bench_cmd->add_option("-o,--output", bench.output, "Output file (default stdout)");
  bench_cmd->callback([&] { action = [&] { return run_bench_command(bench, out); }; });

  std::vector<const char*> argv{"wibsp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // Prints help text for --help, the error otherwise.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "wibsp: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace wibsp
