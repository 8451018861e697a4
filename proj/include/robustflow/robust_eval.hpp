#pragma once

#include <cstdint>
#include <vector>

#include "robustflow/graph.hpp"

namespace robustflow {

// A failure set of exactly k distinct arcs, kept sorted.
struct Scenario {
  std::vector<ArcId> arcs;

  auto operator<=>(const Scenario&) const = default;
  bool contains(ArcId id) const;
};

// Validates size k, range and distinctness; sorts. Throws kInvalidArgument.
Scenario make_scenario(const Instance& inst, std::vector<ArcId> arcs);

// Number of k-subsets of an m-set.
Integer binomial(int m, int k);

Rational nominal_value(const PathFlow& x);
Rational arc_flow_value(const PathFlow& x, ArcId e);

// Sum over support paths meeting the arc set; each path counted once.
Rational destroyed_value(const PathFlow& x, const std::vector<ArcId>& arcs);
inline Rational destroyed_value(const PathFlow& x, const Scenario& s) {
  return destroyed_value(x, s.arcs);
}

struct WorstCase {
  Scenario scenario;
  Rational lambda = 0;
};

// Exhaustive adversary over all C(m, k) scenarios. Ties go to the
// lexicographically smallest sorted arc set. The search may be split across
// `threads` workers; the result does not depend on the thread count.
// Throws Error(kEnumerationBudgetExceeded) when C(m, k) > budget.
WorstCase worst_case_scenario(const Instance& inst, const PathFlow& x,
                              std::uint64_t budget, int threads = 1);

// nominal_value(x) - worst_case_scenario(...).lambda, no clamping.
Rational robust_value(const Instance& inst, const PathFlow& x,
                      std::uint64_t budget, int threads = 1);

}  // namespace robustflow
