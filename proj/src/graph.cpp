#include "robustflow/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "robustflow/error.hpp"

namespace robustflow {

namespace {

bool node_in_range(const Instance& inst, NodeId v) {
  return v >= 0 && v < inst.node_count();
}

}  // namespace

ArcId Instance::add_arc(NodeId tail, NodeId head, Capacity capacity) {
  const ArcId id = arc_count();
  arcs_.push_back(Arc{id, tail, head, std::move(capacity)});
  if (tail >= 0 && tail < node_count_) out_[tail].push_back(id);
  if (head >= 0 && head < node_count_) in_[head].push_back(id);
  return id;
}

NodeId Instance::add_node() {
  out_.emplace_back();
  in_.emplace_back();
  return node_count_++;
}

std::span<const ArcId> Instance::out_arcs(NodeId v) const {
  return out_.at(static_cast<std::size_t>(v));
}

std::span<const ArcId> Instance::in_arcs(NodeId v) const {
  return in_.at(static_cast<std::size_t>(v));
}

void Instance::set_capacity(ArcId id, Capacity capacity) {
  arcs_.at(static_cast<std::size_t>(id)).capacity = std::move(capacity);
}

bool Instance::has_infinite_capacity() const {
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [](const Arc& a) { return a.capacity.is_infinite(); });
}

bool Instance::all_capacities_integral() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) {
    return a.capacity.is_finite() && is_integral(a.capacity.value());
  });
}

bool operator==(const Instance& a, const Instance& b) {
  if (a.node_count_ != b.node_count_ || a.source_ != b.source_ ||
      a.sink_ != b.sink_ || a.k_ != b.k_ || a.arcs_.size() != b.arcs_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arcs_.size(); ++i) {
    const Arc& x = a.arcs_[i];
    const Arc& y = b.arcs_[i];
    if (x.tail != y.tail || x.head != y.head || !(x.capacity == y.capacity)) {
      return false;
    }
  }
  return true;
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  auto& out = report.violations;
  if (inst.node_count() < 2) out.push_back("node count must be at least 2");
  if (!node_in_range(inst, inst.source())) out.push_back("source out of range");
  if (!node_in_range(inst, inst.sink())) out.push_back("sink out of range");
  if (inst.source() == inst.sink()) out.push_back("source equals sink");
  for (std::size_t i = 0; i < inst.arcs().size(); ++i) {
    const Arc& a = inst.arcs()[i];
    const std::string tag = "arc " + std::to_string(i) + ": ";
    if (a.id != static_cast<ArcId>(i)) out.push_back(tag + "id not consecutive");
    if (!node_in_range(inst, a.tail)) out.push_back(tag + "tail out of range");
    if (!node_in_range(inst, a.head)) out.push_back(tag + "head out of range");
    if (a.tail == a.head) out.push_back(tag + "self-loop");
  }
  if (inst.k() < 0) out.push_back("k is negative");
  if (inst.k() > inst.arc_count()) out.push_back("k exceeds arc count");
  return report;
}

void require_valid(const Instance& inst) {
  const ValidationReport report = validate_instance(inst);
  if (!report.ok()) {
    throw Error(ErrorKind::kInvalidInstance,
                "invalid instance: " + report.violations.front());
  }
}

bool Path::contains(ArcId id) const {
  return std::find(arcs.begin(), arcs.end(), id) != arcs.end();
}

bool is_simple_st_path(const Instance& inst, const Path& path) {
  if (path.arcs.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(inst.node_count()), 0);
  NodeId at = inst.source();
  seen[at] = 1;
  for (ArcId id : path.arcs) {
    if (id < 0 || id >= inst.arc_count()) return false;
    const Arc& a = inst.arc(id);
    if (a.tail != at) return false;
    at = a.head;
    if (seen[at]) return false;
    seen[at] = 1;
  }
  return at == inst.sink();
}

void PathFlow::add(const Path& path, const Rational& value) {
  if (value < 0) {
    throw Error(ErrorKind::kInvalidArgument, "path flow value is negative");
  }
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace(path, value);
  if (!inserted) it->second += value;
}

Rational PathFlow::value_of(const Path& path) const {
  auto it = entries_.find(path);
  return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<Rational> PathFlow::arc_flows(int arc_count) const {
  std::vector<Rational> out(static_cast<std::size_t>(arc_count), Rational(0));
  for (const auto& [path, value] : entries_) {
    for (ArcId id : path.arcs) out.at(static_cast<std::size_t>(id)) += value;
  }
  return out;
}

void require_feasible(const Instance& inst, const PathFlow& flow) {
  for (const auto& [path, value] : flow.entries()) {
    if (!is_simple_st_path(inst, path)) {
      throw Error(ErrorKind::kNotFeasible, "flow uses a non-path arc sequence");
    }
  }
  const auto totals = flow.arc_flows(inst.arc_count());
  for (const Arc& a : inst.arcs()) {
    if (a.capacity.is_finite() && totals[a.id] > a.capacity.value()) {
      throw Error(ErrorKind::kNotFeasible,
                  "arc " + std::to_string(a.id) + " carries " +
                      to_string(totals[a.id]) + " > capacity " +
                      to_string(a.capacity));
    }
  }
}

bool is_feasible(const Instance& inst, const PathFlow& flow) {
  try {
    require_feasible(inst, flow);
    return true;
  } catch (const Error&) {
    return false;
  }
}

CapacityOverride unit_override(const Instance& inst) {
  CapacityOverride out;
  for (const Arc& a : inst.arcs()) out.emplace(a.id, Capacity(1));
  return out;
}

std::vector<Path> enumerate_paths(const Instance& inst, std::size_t limit) {
  require_valid(inst);
  if (limit < 1) {
    throw Error(ErrorKind::kInvalidArgument, "path limit must be at least 1");
  }
  std::vector<Path> paths;
  std::vector<char> on_path(static_cast<std::size_t>(inst.node_count()), 0);
  std::vector<ArcId> stack_arcs;
  // Frame: node and the index of the next outgoing arc to try.
  std::vector<std::pair<NodeId, std::size_t>> frames;
  frames.emplace_back(inst.source(), 0);
  on_path[inst.source()] = 1;
  while (!frames.empty()) {
    auto& [node, next] = frames.back();
    const auto outs = inst.out_arcs(node);
    if (next == outs.size()) {
      on_path[node] = 0;
      frames.pop_back();
      if (!stack_arcs.empty()) stack_arcs.pop_back();
      continue;
    }
    const Arc& a = inst.arc(outs[next++]);
    if (on_path[a.head]) continue;
    if (a.head == inst.sink()) {
      stack_arcs.push_back(a.id);
      paths.push_back(Path{stack_arcs});
      stack_arcs.pop_back();
      if (paths.size() > limit) {
        throw Error(ErrorKind::kPathLimitExceeded,
                    "more than " + std::to_string(limit) + " s-t paths");
      }
      continue;
    }
    stack_arcs.push_back(a.id);
    on_path[a.head] = 1;
    frames.emplace_back(a.head, 0);
  }
  return paths;
}

namespace {

struct IntegralFlow {
  Integer scale = 1;
  std::vector<Integer> capacity;
  std::vector<Integer> flow;
};

std::vector<Rational> effective_capacities(const Instance& inst,
                                           const CapacityOverride& override_) {
  std::vector<Rational> caps;
  caps.reserve(inst.arcs().size());
  for (const Arc& a : inst.arcs()) {
    auto it = override_.find(a.id);
    const Capacity& c = it == override_.end() ? a.capacity : it->second;
    if (c.is_infinite()) {
      throw Error(ErrorKind::kInfiniteCapacity,
                  "arc " + std::to_string(a.id) +
                      " has INF capacity; finitize first");
    }
    caps.push_back(c.value());
  }
  return caps;
}

// Residual step: arc id plus direction.
struct Step {
  ArcId arc;
  bool forward;
};

// BFS over residual arcs with residual >= delta. Returns the parent step of
// every reached node (arc -1 for unreached).
std::vector<Step> residual_bfs(const Instance& inst, const IntegralFlow& f,
                               const Integer& delta) {
  const auto n = static_cast<std::size_t>(inst.node_count());
  std::vector<Step> parent(n, Step{-1, true});
  std::vector<char> seen(n, 0);
  std::deque<NodeId> queue{inst.source()};
  seen[inst.source()] = 1;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    const auto outs = inst.out_arcs(v);
    const auto ins = inst.in_arcs(v);
    // Merge by arc id so the exploration order is stable.
    std::size_t i = 0, j = 0;
    while (i < outs.size() || j < ins.size()) {
      const bool take_out =
          j == ins.size() || (i < outs.size() && outs[i] <= ins[j]);
      const ArcId id = take_out ? outs[i++] : ins[j++];
      const Arc& a = inst.arc(id);
      const NodeId w = take_out ? a.head : a.tail;
      if (seen[w]) continue;
      const bool usable = take_out ? f.capacity[id] - f.flow[id] >= delta
                                   : f.flow[id] >= delta;
      if (!usable) continue;
      seen[w] = 1;
      parent[w] = Step{id, take_out};
      queue.push_back(w);
    }
  }
  return parent;
}

IntegralFlow solve_integral(const Instance& inst,
                            const CapacityOverride& override_) {
  require_valid(inst);
  const auto caps = effective_capacities(inst, override_);
  IntegralFlow f;
  for (const Rational& c : caps) f.scale = lcm(f.scale, c.get_den());
  Integer max_cap = 0;
  for (const Rational& c : caps) {
    Rational scaled = c * f.scale;
    f.capacity.push_back(scaled.get_num());
    max_cap = std::max(max_cap, f.capacity.back());
  }
  f.flow.assign(caps.size(), Integer(0));

  Integer delta = 1;
  while (delta * 2 <= max_cap) delta *= 2;
  if (max_cap == 0) delta = 0;
  while (delta > 0) {
    for (;;) {
      const auto parent = residual_bfs(inst, f, delta);
      if (parent[inst.sink()].arc < 0) break;
      Integer bottleneck = -1;
      for (NodeId v = inst.sink(); v != inst.source();) {
        const Step s = parent[v];
        const Arc& a = inst.arc(s.arc);
        const Integer r = s.forward ? f.capacity[s.arc] - f.flow[s.arc]
                                    : f.flow[s.arc];
        if (bottleneck < 0 || r < bottleneck) bottleneck = r;
        v = s.forward ? a.tail : a.head;
      }
      for (NodeId v = inst.sink(); v != inst.source();) {
        const Step s = parent[v];
        const Arc& a = inst.arc(s.arc);
        if (s.forward) {
          f.flow[s.arc] += bottleneck;
        } else {
          f.flow[s.arc] -= bottleneck;
        }
        v = s.forward ? a.tail : a.head;
      }
    }
    delta /= 2;
  }
  return f;
}

}  // namespace

MaxFlowResult max_flow(const Instance& inst,
                       const CapacityOverride& capacity_override) {
  const IntegralFlow f = solve_integral(inst, capacity_override);
  MaxFlowResult out;
  out.arc_flow.reserve(f.flow.size());
  for (const Integer& x : f.flow) {
    Rational r(x, f.scale);
    r.canonicalize();
    out.arc_flow.push_back(r);
  }
  for (ArcId id : inst.out_arcs(inst.source())) out.value += out.arc_flow[id];
  for (ArcId id : inst.in_arcs(inst.source())) out.value -= out.arc_flow[id];
  return out;
}

Cut min_cut(const Instance& inst, const CapacityOverride& capacity_override) {
  const IntegralFlow f = solve_integral(inst, capacity_override);
  const auto parent = residual_bfs(inst, f, Integer(1));
  std::vector<char> side(static_cast<std::size_t>(inst.node_count()), 0);
  side[inst.source()] = 1;
  for (NodeId v = 0; v < inst.node_count(); ++v) {
    if (parent[v].arc >= 0) side[v] = 1;
  }
  Cut cut;
  for (NodeId v = 0; v < inst.node_count(); ++v) {
    if (side[v]) cut.source_side.push_back(v);
  }
  Integer scaled = 0;
  for (const Arc& a : inst.arcs()) {
    if (side[a.tail] && !side[a.head]) {
      cut.arcs.push_back(a.id);
      scaled += f.capacity[a.id];
    }
  }
  cut.capacity = Rational(scaled, f.scale);
  cut.capacity.canonicalize();
  return cut;
}

PathFlow path_decompose(const Instance& inst,
                        std::span<const Rational> arc_flow) {
  require_valid(inst);
  if (arc_flow.size() != inst.arcs().size()) {
    throw Error(ErrorKind::kNotAFlow, "arc flow has wrong length");
  }
  std::vector<Rational> rest(arc_flow.begin(), arc_flow.end());
  for (const Rational& v : rest) {
    if (v < 0) throw Error(ErrorKind::kNotAFlow, "negative arc flow");
  }
  for (NodeId v = 0; v < inst.node_count(); ++v) {
    if (v == inst.source() || v == inst.sink()) continue;
    Rational balance = 0;
    for (ArcId id : inst.out_arcs(v)) balance += rest[id];
    for (ArcId id : inst.in_arcs(v)) balance -= rest[id];
    if (balance != 0) {
      throw Error(ErrorKind::kNotAFlow,
                  "conservation violated at node " + std::to_string(v));
    }
  }

  auto first_positive_out = [&](NodeId v) -> ArcId {
    for (ArcId id : inst.out_arcs(v)) {
      if (rest[id] > 0) return id;
    }
    return -1;
  };

  PathFlow out;
  const auto n = static_cast<std::size_t>(inst.node_count());
  for (;;) {
    if (first_positive_out(inst.source()) < 0) break;
    // Walk forward from the source until the sink is hit or a node repeats.
    std::vector<int> position(n, -1);
    std::vector<ArcId> walk;
    NodeId at = inst.source();
    position[at] = 0;
    bool cycle = false;
    int cycle_start = 0;
    while (at != inst.sink()) {
      const ArcId id = first_positive_out(at);
      if (id < 0) {
        // Only reachable when the source has outflow that returns to it.
        throw Error(ErrorKind::kNotAFlow, "flow walk got stuck");
      }
      walk.push_back(id);
      at = inst.arc(id).head;
      if (position[at] >= 0) {
        cycle = true;
        cycle_start = position[at];
        break;
      }
      position[at] = static_cast<int>(walk.size());
    }
    const auto begin = walk.begin() + (cycle ? cycle_start : 0);
    Rational bottleneck = rest[*begin];
    for (auto it = begin; it != walk.end(); ++it) {
      bottleneck = std::min(bottleneck, rest[*it]);
    }
    for (auto it = begin; it != walk.end(); ++it) rest[*it] -= bottleneck;
    if (!cycle) out.add(Path{walk}, bottleneck);
  }
  return out;
}

}  // namespace robustflow
