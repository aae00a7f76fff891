#include "wibsp/pipeline.hpp"

#include <stdexcept>

#include "wibsp/error.hpp"

namespace wibsp {

namespace {

PipelineResult finish(const ReducedGraph& r, const WeightedGraph& g, SolveResult engine) {
  PipelineResult out{lift_independent_set(r, g, engine.solution), std::move(engine)};
  if (const auto check = verify(g, out.solution); !check) {
    throw std::logic_error("lifted solution failed verification: " + check.diagnostic);
  }
  if (out.solution.weight != out.engine.weight) {
    throw std::logic_error("lifted weight differs from independent-set weight");
  }
  return out;
}

}  // namespace

PipelineResult solve_exact(const WeightedGraph& g, const SolverLimits& limits) {
  const ReducedGraph r = build_h(g);
  return finish(r, g, wisp_exact(r.h(), limits));
}

PipelineResult solve_approx(const WeightedGraph& g) {
  const ReducedGraph r = build_h(g);
  const SolveResult greedy = wisp_greedy(r.h());
  SolveResult improved = wisp_local_search(r.h(), greedy.solution);
  improved.stats.elapsed_ms += greedy.stats.elapsed_ms;
  return finish(r, g, std::move(improved));
}

Verification verify(const WeightedGraph& g, const LiftedSolution& sol) {
  if (auto violation = find_violation(g, sol)) return {false, *violation};
  return {};
}

Weight oct_weight(const WeightedGraph& g, const LiftedSolution& sol) {
  if (auto violation = find_violation(g, sol)) throw InvalidSolution(*violation);
  return g.total_weight() - sol.weight;
}

}  // namespace wibsp
