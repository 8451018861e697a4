#include "robustflow/transforms.hpp"

#include <algorithm>
#include <deque>

#include "robustflow/error.hpp"

namespace robustflow {

std::map<ArcId, ArcId> ArcMap::inverse() const {
  std::map<ArcId, ArcId> out;
  for (const auto& [original, split] : forward) {
    out.emplace(split.gateway, original);
    for (ArcId u : split.units) out.emplace(u, original);
  }
  return out;
}

SplitResult split_capacities(const Instance& inst) {
  require_valid(inst);
  Integer u_max = 0;
  for (const Arc& a : inst.arcs()) {
    if (a.capacity.is_infinite() || !is_integral(a.capacity.value())) {
      throw Error(ErrorKind::kNonIntegralCapacity,
                  "arc " + std::to_string(a.id) + " has capacity " +
                      to_string(a.capacity));
    }
    u_max = std::max(u_max, a.capacity.value().get_num());
  }
  SplitResult out;
  out.instance = Instance(inst.node_count(), inst.source(), inst.sink(),
                          inst.k());
  for (const Arc& a : inst.arcs()) {
    const NodeId middle = out.instance.add_node();
    SplitArcs split;
    split.gateway = out.instance.add_arc(a.tail, middle, Rational(u_max));
    const long units = a.capacity.value().get_num().get_si();
    for (long i = 0; i < units; ++i) {
      split.units.push_back(out.instance.add_arc(middle, a.head, 1));
    }
    out.arc_map.forward.emplace(a.id, std::move(split));
  }
  return out;
}

PathFlow map_flow_back(const Instance& original, const Instance& split,
                       const ArcMap& arc_map, const PathFlow& flow) {
  require_feasible(split, flow);
  const auto inverse = arc_map.inverse();
  PathFlow out;
  for (const auto& [path, value] : flow.entries()) {
    if (path.arcs.size() % 2 != 0) {
      throw Error(ErrorKind::kNotFeasible, "path does not alternate gateways");
    }
    Path contracted;
    for (std::size_t i = 0; i < path.arcs.size(); i += 2) {
      const auto g = inverse.find(path.arcs[i]);
      const auto u = inverse.find(path.arcs[i + 1]);
      if (g == inverse.end() || u == inverse.end() || g->second != u->second ||
          arc_map.forward.at(g->second).gateway != path.arcs[i]) {
        throw Error(ErrorKind::kNotFeasible,
                    "path does not follow a gateway/unit pair");
      }
      contracted.arcs.push_back(g->second);
    }
    out.add(contracted, value);
  }
  require_feasible(original, out);
  return out;
}

Instance finitize_infinities(const Instance& inst) {
  require_valid(inst);
  // Any all-INF s-t path makes the flow unbounded.
  std::vector<char> seen(static_cast<std::size_t>(inst.node_count()), 0);
  std::deque<NodeId> queue{inst.source()};
  seen[inst.source()] = 1;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (ArcId id : inst.out_arcs(v)) {
      const Arc& a = inst.arc(id);
      if (a.capacity.is_infinite() && !seen[a.head]) {
        seen[a.head] = 1;
        queue.push_back(a.head);
      }
    }
  }
  if (seen[inst.sink()]) {
    throw Error(ErrorKind::kUnboundedFlow,
                "an s-t path of INF arcs makes the flow unbounded");
  }
  Rational bound = 0;
  for (const Arc& a : inst.arcs()) {
    if (a.capacity.is_finite()) bound += a.capacity.value();
  }
  Instance out = inst;
  for (const Arc& a : inst.arcs()) {
    if (a.capacity.is_infinite()) out.set_capacity(a.id, bound);
  }
  return out;
}

ScaleResult scale_to_integral(const Instance& inst) {
  require_valid(inst);
  ScaleResult out;
  for (const Arc& a : inst.arcs()) {
    if (a.capacity.is_infinite()) {
      throw Error(ErrorKind::kInfiniteCapacity,
                  "scaling needs finite capacities");
    }
    out.scale = lcm(out.scale, a.capacity.value().get_den());
  }
  out.instance = inst;
  for (const Arc& a : inst.arcs()) {
    out.instance.set_capacity(a.id,
                              Rational(a.capacity.value() * out.scale));
  }
  return out;
}

}  // namespace robustflow
