#pragma once

#include <string>

#include "wibsp/reduction.hpp"
#include "wibsp/solvers.hpp"

namespace wibsp {

struct PipelineResult {
  LiftedSolution solution;
  /// Result of the independent-set engine on H(G); `optimal` carries over.
  SolveResult engine;
};

/// build_h -> wisp_exact -> lift, verified before returning.
PipelineResult solve_exact(const WeightedGraph& g, const SolverLimits& limits = {});

/// build_h -> wisp_greedy -> wisp_local_search -> lift, verified before returning.
PipelineResult solve_approx(const WeightedGraph& g);

struct Verification {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

Verification verify(const WeightedGraph& g, const LiftedSolution& sol);

/// Weight of the odd cycle transversal V \ W left by sol.
Weight oct_weight(const WeightedGraph& g, const LiftedSolution& sol);

}  // namespace wibsp
