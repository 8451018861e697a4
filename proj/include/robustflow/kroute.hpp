#pragma once

#include "robustflow/graph.hpp"

namespace robustflow {

struct UniformFlow {
  Rational value = 0;
  PathFlow flow;
};

// Largest F such that a feasible flow of value F puts at most F/h on every
// arc, solved as one exact LP over arc flows and F, then path-decomposed.
UniformFlow max_uniform_flow(const Instance& inst, int h);

struct RobustBaseline {
  PathFlow flow;
  Rational value = 0;      // value of the uniform flow with h = k + 1
  Rational guarantee = 0;  // value / (k + 1), a lower bound on robust value
};

// Uniform (k+1)-route style flow; no k arcs can destroy more than k/(k+1)
// of it.
RobustBaseline robust_baseline(const Instance& inst, int k);

}  // namespace robustflow
