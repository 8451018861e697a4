#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "robustflow/rational.hpp"

namespace robustflow {

using ArcId = int;
using NodeId = int;

struct Arc {
  ArcId id = 0;
  NodeId tail = 0;
  NodeId head = 0;
  Capacity capacity;
};

// Directed multigraph with a source, a sink and a failure budget k. Arcs are
// keyed by id (0..m-1 in insertion order); parallel arcs are distinct.
//
// An Instance may be constructed in an invalid state so that
// validate_instance() can report on it. Every algorithm calls
// require_valid() on entry.
class Instance {
 public:
  Instance() = default;
  Instance(int node_count, NodeId source, NodeId sink, int k)
      : node_count_(node_count), source_(source), sink_(sink), k_(k),
        out_(node_count > 0 ? node_count : 0),
        in_(node_count > 0 ? node_count : 0) {}

  ArcId add_arc(NodeId tail, NodeId head, Capacity capacity);
  NodeId add_node();

  int node_count() const noexcept { return node_count_; }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  NodeId source() const noexcept { return source_; }
  NodeId sink() const noexcept { return sink_; }
  int k() const noexcept { return k_; }

  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(ArcId id) const { return arcs_.at(static_cast<std::size_t>(id)); }

  // Arc ids leaving/entering a node, ascending.
  std::span<const ArcId> out_arcs(NodeId v) const;
  std::span<const ArcId> in_arcs(NodeId v) const;

  void set_k(int k) { k_ = k; }
  void set_capacity(ArcId id, Capacity capacity);

  bool has_infinite_capacity() const;
  bool all_capacities_integral() const;  // false if any INF

  friend bool operator==(const Instance&, const Instance&);

 private:
  int node_count_ = 0;
  NodeId source_ = 0;
  NodeId sink_ = 0;
  int k_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_instance(const Instance& inst);

// Throws Error(kInvalidInstance) listing the first violation.
void require_valid(const Instance& inst);

// Ordered sequence of arc ids forming a simple source-sink path.
struct Path {
  std::vector<ArcId> arcs;

  auto operator<=>(const Path&) const = default;
  bool contains(ArcId id) const;
};

// True iff `path` is a simple source-sink path in `inst`.
bool is_simple_st_path(const Instance& inst, const Path& path);

// Nonnegative values on simple paths. Zero-valued entries are never stored.
class PathFlow {
 public:
  using Map = std::map<Path, Rational>;

  // Accumulates onto an existing entry. Throws on negative value.
  void add(const Path& path, const Rational& value);

  const Map& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Rational value_of(const Path& path) const;

  // Dense per-arc totals for an instance with m arcs.
  std::vector<Rational> arc_flows(int arc_count) const;

  friend bool operator==(const PathFlow&, const PathFlow&) = default;

 private:
  Map entries_;
};

// Throws Error(kNotFeasible) if a path is not a simple s-t path of `inst` or
// an arc capacity is exceeded.
void require_feasible(const Instance& inst, const PathFlow& flow);
bool is_feasible(const Instance& inst, const PathFlow& flow);

struct Cut {
  std::vector<ArcId> arcs;           // ascending
  std::vector<NodeId> source_side;   // ascending
  Rational capacity = 0;
};

using CapacityOverride = std::map<ArcId, Capacity>;

// Override mapping every arc to capacity 1.
CapacityOverride unit_override(const Instance& inst);

struct MaxFlowResult {
  Rational value = 0;
  std::vector<Rational> arc_flow;  // indexed by arc id
};

// All simple source-sink paths in lexicographic order of arc-id sequences.
// Throws Error(kPathLimitExceeded) if more than `limit` exist.
std::vector<Path> enumerate_paths(const Instance& inst, std::size_t limit);

// Exact maximum flow by capacity-scaling augmenting paths on the integers
// obtained after clearing denominators. Throws Error(kInfiniteCapacity) if an
// effective capacity is INF.
MaxFlowResult max_flow(const Instance& inst,
                       const CapacityOverride& capacity_override = {});

// Minimum cut derived from the residual graph of max_flow: the source side is
// the set of nodes reachable from the source.
Cut min_cut(const Instance& inst,
            const CapacityOverride& capacity_override = {});

// Decomposes an arc flow into source-sink paths after cancelling cycles.
// Throws Error(kNotAFlow) on negative values or violated conservation.
PathFlow path_decompose(const Instance& inst,
                        std::span<const Rational> arc_flow);

}  // namespace robustflow
