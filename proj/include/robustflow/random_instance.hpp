#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "robustflow/gadgets.hpp"
#include "robustflow/graph.hpp"

namespace robustflow {

struct RandomInstanceOptions {
  int min_nodes = 3;
  int max_nodes = 8;
  int min_arcs = 2;
  int max_arcs = 14;
  int min_k = 0;
  int max_k = 2;
  std::vector<long> capacities{1, 2, 3};
  // Up to this many random s-t paths are laid down before the remaining
  // arcs; 0 gives a fully uniform arc placement.
  int backbones = 3;
};

// Source 0, sink n-1; arcs never enter the source or leave the sink. k is
// drawn from [min_k, max_k] and clipped to the arc count.
Instance random_instance(std::mt19937_64& rng,
                         const RandomInstanceOptions& options);

// Digraph on n nodes with m random arcs (no loops); used for arc-disjoint
// path inputs.
SimpleGraph random_digraph(std::mt19937_64& rng, int nodes, int arcs);

}  // namespace robustflow
