#include "robustflow/random_instance.hpp"

#include <algorithm>

#include "robustflow/error.hpp"
#include "robustflow/gadgets.hpp"

namespace robustflow {

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Instance random_instance(std::mt19937_64& rng,
                         const RandomInstanceOptions& options) {
  if (options.min_nodes < 2 || options.max_nodes < options.min_nodes ||
      options.max_arcs < options.min_arcs || options.min_arcs < 0 ||
      options.capacities.empty() || options.max_k < options.min_k) {
    throw Error(ErrorKind::kInvalidArgument, "bad random instance options");
  }
  const int n = draw(rng, options.min_nodes, options.max_nodes);
  const int m = draw(rng, options.min_arcs, options.max_arcs);
  const NodeId s = 0;
  const NodeId t = n - 1;
  Instance inst(n, s, t, 0);
  auto add = [&](NodeId tail, NodeId head) {
    const long cap = options.capacities[static_cast<std::size_t>(
        draw(rng, 0, static_cast<int>(options.capacities.size()) - 1))];
    inst.add_arc(tail, head, cap);
  };
  // Backbone s-t paths first so most draws carry flow; arcs left over are
  // placed uniformly.
  std::vector<NodeId> inner;
  for (NodeId v = 1; v + 1 < n; ++v) inner.push_back(v);
  const int backbones = options.backbones > 0 ? draw(rng, 1, options.backbones)
                                              : 0;
  for (int b = 0; b < backbones; ++b) {
    const int room = m - inst.arc_count();
    if (room < 1) break;
    const int hops = draw(rng, 0, std::min<int>(inner.size(), room - 1));
    std::shuffle(inner.begin(), inner.end(), rng);
    NodeId at = s;
    for (int i = 0; i < hops; ++i) {
      add(at, inner[static_cast<std::size_t>(i)]);
      at = inner[static_cast<std::size_t>(i)];
    }
    add(at, t);
  }
  while (inst.arc_count() < m) {
    NodeId tail = 0, head = 0;
    do {
      tail = draw(rng, 0, n - 1);
      head = draw(rng, 0, n - 1);
    } while (tail == head || tail == t || head == s);
    add(tail, head);
  }
  inst.set_k(std::min(draw(rng, options.min_k, options.max_k), m));
  return inst;
}

SimpleGraph random_digraph(std::mt19937_64& rng, int nodes, int arcs) {
  if (nodes < 2) throw Error(ErrorKind::kInvalidArgument, "need >= 2 nodes");
  SimpleGraph g{nodes, {}};
  for (int i = 0; i < arcs; ++i) {
    int a = 0, b = 0;
    do {
      a = draw(rng, 0, nodes - 1);
      b = draw(rng, 0, nodes - 1);
    } while (a == b);
    g.edges.emplace_back(a, b);
  }
  return g;
}

}  // namespace robustflow
