#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "robustflow/graph.hpp"
#include "robustflow/robust_eval.hpp"

namespace robustflow {

struct PrimalSolution {
  PathFlow x;
  Rational lambda = 0;
  Rational objective = 0;  // nominal_value(x) - lambda
};

// Multipliers for the dual of the path LP: y per arc (indexed by arc id),
// z per scenario. Scenarios absent from z carry zero.
struct DualSolution {
  std::vector<Rational> y;
  std::map<Scenario, Rational> z;
};

struct SolveReport {
  PrimalSolution primal;
  std::optional<DualSolution> dual;
  Scenario worst_scenario;
  int iterations = 0;
  int scenarios_generated = 0;
  // Objective of every master LP solved, in order (row generation only).
  std::vector<Rational> master_objectives;
};

struct LpOptions {
  std::size_t path_limit = 100000;
  std::uint64_t scenario_budget = 1000000;
  int threads = 1;
  // When set, adds the equality sum_P x(P) = *fixed_nominal and omits the
  // dual certificate.
  std::optional<Rational> fixed_nominal;
};

// Solves max sum x(P) - lambda with every capacity row and every scenario row
// of the C(m, k) family materialized. Requires finite capacities.
SolveReport solve_full_lp(const Instance& inst, const LpOptions& options = {});

// Same optimum, adding scenario rows lazily: the worst-case adversary acts as
// the separation oracle for the master's flow.
SolveReport solve_row_generation(const Instance& inst,
                                 const LpOptions& options = {});

// Dual feasibility over all enumerated paths, sum z = 1, nonnegativity, and
// exact equality of the dual objective with the primal objective.
bool verify_duality(const SolveReport& report, const Instance& inst,
                    std::size_t path_limit = 100000);

struct SeparationResult {
  Path path;
  Rational lhs = 0;  // sum_{e in P} y(e) + sum_{S : P meets S} z(S)
};

// Brute-force separation over the given path list: the path with the
// smallest left-hand side (first in list order on ties) if that side is < 1.
std::optional<SeparationResult> dual_separation(
    const Instance& inst, const std::vector<Path>& paths,
    const std::vector<Rational>& y, const std::map<Scenario, Rational>& z);

}  // namespace robustflow
