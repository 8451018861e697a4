#pragma once

#include <map>
#include <vector>

#include "robustflow/graph.hpp"

namespace robustflow {

struct SplitArcs {
  ArcId gateway = 0;
  std::vector<ArcId> units;
};

// Original arc id -> its replacement in the split instance.
struct ArcMap {
  std::map<ArcId, SplitArcs> forward;

  // Split-instance arc id -> original arc id.
  std::map<ArcId, ArcId> inverse() const;
};

struct SplitResult {
  Instance instance;
  ArcMap arc_map;
};

// Every arc (v, w) of integral capacity u becomes v -> n (capacity u_max)
// followed by u parallel unit arcs n -> w through a fresh node n. k is kept.
// Throws Error(kNonIntegralCapacity) for INF or fractional capacities.
SplitResult split_capacities(const Instance& inst);

// Contracts every gateway/unit pair of a split-instance path flow back onto
// the original arc. Throws Error(kNotFeasible) if `flow` is infeasible in the
// split instance or does not follow the split structure.
PathFlow map_flow_back(const Instance& original, const Instance& split,
                       const ArcMap& arc_map, const PathFlow& flow);

// Replaces every INF capacity by the sum of all finite capacities. Throws
// Error(kUnboundedFlow) if an s-t path made only of INF arcs exists.
Instance finitize_infinities(const Instance& inst);

struct ScaleResult {
  Instance instance;
  Integer scale = 1;  // lcm of capacity denominators
};

// Multiplies all capacities by the lcm of their denominators.
ScaleResult scale_to_integral(const Instance& inst);

}  // namespace robustflow
