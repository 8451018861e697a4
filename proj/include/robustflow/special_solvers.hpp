#pragma once

#include <cstdint>
#include <vector>

#include "robustflow/graph.hpp"
#include "robustflow/robust_eval.hpp"

namespace robustflow {

struct IntegralSolution {
  PathFlow flow;
  Rational value = 0;
};

// u == 1 everywhere: a maximum flow is a maximum robust flow, with value
// max{0, |C| - k} for a minimum cut C. Throws Error(kNotUnitCapacity).
IntegralSolution solve_unit_capacity(const Instance& inst);

// Integral capacities in {1, 2}: the best of the zero flow, a maximum flow
// under unit capacities (x1) and a maximum flow under the true capacities
// (x2), worth max{0, val(x1) - k, val(x2) - 2k}. Ties prefer the larger
// nominal value, then x1. Throws Error(kCapacityOutOfRange).
IntegralSolution solve_integral_cap2(const Instance& inst);

struct GreedyStep {
  ArcId arc = 0;
  Rational delta = 0;
};

struct GreedyInterdiction {
  std::vector<ArcId> chosen;  // in selection order
  std::vector<GreedyStep> trace;
  std::vector<ArcId> cut;     // the minimum-cardinality cut searched
  // max over unchosen cut arcs of the marginal destroyed flow; 0 if the
  // whole cut was taken.
  Rational residual_delta = 0;
};

// Greedy adversary restricted to a minimum-cardinality s-t cut: repeatedly
// takes the cut arc whose surviving paths carry the most flow (smallest id on
// ties) until k arcs are taken or the cut is exhausted.
GreedyInterdiction greedy_cut_interdiction(const Instance& inst,
                                           const PathFlow& x);

// Exhaustive search over integral path-value vectors. Only maximal vectors
// are evaluated by the adversary: raising a path's value by d raises the
// nominal value by d and any destroyed value by at most d, so the robust value
// never drops. Ties go to the lexicographically smallest maximal vector
// (paths in enumeration order). Throws Error(kEnumerationBudgetExceeded) if
// more than `budget` search nodes would be visited.
IntegralSolution brute_force_integral(const Instance& inst,
                                      std::uint64_t budget,
                                      std::size_t path_limit = 100000);

}  // namespace robustflow
