#include "robustflow/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "robustflow/error.hpp"

namespace robustflow {

SimpleGraph complete_graph(int n) {
  SimpleGraph g{n, {}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  }
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g{n, {}};
  for (int i = 0; i < n; ++i) {
    g.edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  }
  return g;
}

namespace {

void require_simple_undirected(const SimpleGraph& graph) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : graph.edges) {
    if (u < 0 || v < 0 || u >= graph.node_count || v >= graph.node_count) {
      throw Error(ErrorKind::kInvalidArgument, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorKind::kInvalidArgument, "graph has a loop");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error(ErrorKind::kInvalidArgument, "graph repeats an edge");
    }
  }
}

}  // namespace

long CliqueGadget::saturated_m_paths() const {
  return (graph.node_count + 4L * static_cast<long>(graph.edges.size())) *
         params.ell;
}

CliqueGadget build_clique_gadget(const SimpleGraph& graph, int kprime) {
  if (kprime < 2 || kprime > graph.node_count) {
    throw Error(ErrorKind::kInvalidCliqueSize,
                "clique size must satisfy 2 <= k' <= |V'|, got " +
                    std::to_string(kprime));
  }
  require_simple_undirected(graph);

  const long n = graph.node_count;
  const long edges = static_cast<long>(graph.edges.size());
  CliqueGadget g;
  g.graph = graph;
  CliqueParams& p = g.params;
  p.kprime = kprime;
  p.ell = n + 2 * edges;
  p.k = kprime * p.ell + (n - kprime) + 2 * edges;
  p.eps = Rational(1, p.ell);
  p.big_m = (1 + p.eps) * p.k;
  p.h = 2 * (static_cast<long>(kprime) * (kprime - 1) / 2) - 2;

  CliqueRoles& r = g.roles;
  Instance inst(0, 0, 1, static_cast<int>(p.k));
  r.s = inst.add_node();
  r.t = inst.add_node();
  r.a.resize(n);
  r.a_group.resize(n);
  r.b_group.resize(n);
  for (long v = 0; v < n; ++v) {
    r.a[v] = inst.add_node();
    for (long i = 0; i < p.ell; ++i) r.a_group[v].push_back(inst.add_node());
    for (long i = 0; i < p.ell; ++i) r.b_group[v].push_back(inst.add_node());
  }
  for (long e = 0; e < edges; ++e) {
    r.a_edge1.push_back(inst.add_node());
    r.a_edge2.push_back(inst.add_node());
  }
  r.v_prime = inst.add_node();
  r.v_second = inst.add_node();

  const Capacity big_m(p.big_m);
  // A x B arcs.
  r.hub_arcs.resize(n);
  r.unit_arcs.resize(n);
  for (long v = 0; v < n; ++v) {
    for (long i = 0; i < p.ell; ++i) {
      r.hub_arcs[v].push_back(inst.add_arc(r.a[v], r.b_group[v][i], big_m));
    }
    for (long i = 0; i < p.ell; ++i) {
      r.unit_arcs[v].push_back(
          inst.add_arc(r.a_group[v][i], r.b_group[v][i], 1));
    }
  }
  r.edge_arcs.resize(edges);
  for (long e = 0; e < edges; ++e) {
    const auto [u, w] = graph.edges[e];
    for (int endpoint : {u, w}) {
      for (NodeId tail : {r.a_edge1[e], r.a_edge2[e]}) {
        for (long i = 0; i < p.ell; ++i) {
          r.edge_arcs[e].push_back(
              inst.add_arc(tail, r.b_group[endpoint][i], big_m));
        }
      }
    }
  }
  // Source arcs into A and sink arcs out of B.
  auto add_source = [&](NodeId a) {
    r.source_arc[a] = inst.add_arc(r.s, a, Capacity::infinite());
  };
  for (long v = 0; v < n; ++v) {
    add_source(r.a[v]);
    for (NodeId a : r.a_group[v]) add_source(a);
  }
  for (long e = 0; e < edges; ++e) {
    add_source(r.a_edge1[e]);
    add_source(r.a_edge2[e]);
  }
  for (long v = 0; v < n; ++v) {
    for (NodeId b : r.b_group[v]) {
      r.sink_arc[b] = inst.add_arc(b, r.t, Capacity::infinite());
    }
  }
  // e_1..e_k: the first h carry 1 + eps.
  for (long i = 0; i < p.k; ++i) {
    r.parallel.push_back(
        inst.add_arc(r.s, r.t, i < p.h ? Capacity(1 + p.eps) : Capacity(1)));
  }
  // Subgraph H on {s, v', v'', t}.
  r.e1_prime = inst.add_arc(r.s, r.v_prime, 1);
  r.e2_prime = inst.add_arc(r.s, r.v_prime, p.eps);
  r.e1_second = inst.add_arc(r.v_second, r.t, 1);
  r.e2_second = inst.add_arc(r.v_second, r.t, p.eps);
  r.s_to_v_second = inst.add_arc(r.s, r.v_second, Rational(1 + p.eps));
  r.v_prime_to_t = inst.add_arc(r.v_prime, r.t, Rational(1 + p.eps));
  r.v_prime_to_v_second = inst.add_arc(r.v_prime, r.v_second, p.eps);
  r.h_arcs = {r.e1_prime,      r.e2_prime,     r.e1_second,
              r.e2_second,     r.s_to_v_second, r.v_prime_to_t,
              r.v_prime_to_v_second};
  r.f_arcs = r.parallel;
  r.f_arcs.insert(r.f_arcs.end(), r.h_arcs.begin(), r.h_arcs.end());
  std::sort(r.f_arcs.begin(), r.f_arcs.end());

  g.instance = std::move(inst);
  return g;
}

int induced_edge_count(const SimpleGraph& graph, const std::vector<int>& u) {
  int count = 0;
  for (auto [a, b] : graph.edges) {
    const bool in_a = std::find(u.begin(), u.end(), a) != u.end();
    const bool in_b = std::find(u.begin(), u.end(), b) != u.end();
    if (in_a && in_b) ++count;
  }
  return count;
}

int h_star(const SimpleGraph& graph, int kprime, std::uint64_t budget) {
  if (kprime > graph.node_count || kprime < 0) {
    throw Error(ErrorKind::kInvalidCliqueSize, "k' must lie in [0, |V'|]");
  }
  if (graph.node_count >= 63 ||
      (std::uint64_t{1} << graph.node_count) > budget) {
    throw Error(ErrorKind::kEnumerationBudgetExceeded,
                "2^|V'| vertex subsets exceed budget");
  }
  int best = 0;
  const std::uint64_t limit = std::uint64_t{1} << graph.node_count;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) > kprime) continue;
    int count = 0;
    for (auto [a, b] : graph.edges) {
      if ((mask >> a & 1U) && (mask >> b & 1U)) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

PathFlow canonical_gadget_flow(const CliqueGadget& g, HVariant variant) {
  const CliqueRoles& r = g.roles;
  const Instance& inst = g.instance;
  PathFlow x;
  auto saturate_ab = [&](ArcId id) {
    const Arc& a = inst.arc(id);
    x.add(Path{{r.source_arc.at(a.tail), id, r.sink_arc.at(a.head)}},
          a.capacity.value());
  };
  for (const auto& group : r.hub_arcs) {
    for (ArcId id : group) saturate_ab(id);
  }
  for (const auto& group : r.unit_arcs) {
    for (ArcId id : group) saturate_ab(id);
  }
  for (const auto& group : r.edge_arcs) {
    for (ArcId id : group) saturate_ab(id);
  }
  for (ArcId id : r.parallel) x.add(Path{{id}}, inst.arc(id).capacity.value());

  const Rational& eps = g.params.eps;
  x.add(Path{{r.e1_prime, r.v_prime_to_t}}, 1);
  x.add(Path{{r.s_to_v_second, r.e1_second}}, 1);
  if (variant == HVariant::kZeroRoute) {
    x.add(Path{{r.e2_prime, r.v_prime_to_t}}, eps);
    x.add(Path{{r.s_to_v_second, r.e2_second}}, eps);
  } else {
    x.add(Path{{r.e2_prime, r.v_prime_to_v_second, r.e2_second}}, eps);
  }
  return x;
}

long forced_arc_count(const CliqueGadget& g, const std::vector<int>& u) {
  const long n = g.graph.node_count;
  const long size = static_cast<long>(u.size());
  return g.params.ell * size + n - size +
         2 * (static_cast<long>(g.graph.edges.size()) -
              induced_edge_count(g.graph, u));
}

namespace {

std::vector<ArcId> forced_arcs(const CliqueGadget& g,
                               const std::vector<int>& u) {
  const CliqueRoles& r = g.roles;
  std::vector<char> in_u(static_cast<std::size_t>(g.graph.node_count), 0);
  for (int v : u) {
    if (v < 0 || v >= g.graph.node_count || in_u[v]) {
      throw Error(ErrorKind::kInvalidArgument,
                  "U must hold distinct vertices of G'");
    }
    in_u[v] = 1;
  }
  if (static_cast<int>(u.size()) > g.params.kprime) {
    throw Error(ErrorKind::kInvalidArgument, "|U| exceeds k'");
  }
  std::vector<ArcId> arcs;
  for (int v = 0; v < g.graph.node_count; ++v) {
    if (in_u[v]) {
      for (NodeId b : r.b_group[v]) arcs.push_back(r.sink_arc.at(b));
    } else {
      arcs.push_back(r.source_arc.at(r.a[v]));
    }
  }
  for (std::size_t e = 0; e < g.graph.edges.size(); ++e) {
    const auto [a, b] = g.graph.edges[e];
    if (!(in_u[a] && in_u[b])) {
      arcs.push_back(r.source_arc.at(r.a_edge1[e]));
      arcs.push_back(r.source_arc.at(r.a_edge2[e]));
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace

Scenario structured_scenario(const CliqueGadget& g, const std::vector<int>& u,
                             const std::vector<ArcId>& f_star) {
  std::vector<ArcId> arcs = forced_arcs(g, u);
  const std::size_t forced = arcs.size();
  const auto& f = g.roles.f_arcs;
  for (ArcId id : f_star) {
    const bool in_forced = std::binary_search(arcs.begin(),
                                              arcs.begin() + forced, id);
    if (in_forced) {
      throw Error(ErrorKind::kSizeMismatch,
                  "F* overlaps the arcs forced by U");
    }
    if (!std::binary_search(f.begin(), f.end(), id)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "F* arc " + std::to_string(id) + " is not in F");
    }
  }
  arcs.insert(arcs.end(), f_star.begin(), f_star.end());
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  if (static_cast<long>(arcs.size()) != g.params.k ||
      arcs.size() != forced + f_star.size()) {
    throw Error(ErrorKind::kSizeMismatch,
                "structured scenario has " + std::to_string(arcs.size()) +
                    " distinct arcs, expected k = " +
                    std::to_string(g.params.k));
  }
  return Scenario{std::move(arcs)};
}

namespace {

// F arcs sorted by flow descending, then id ascending.
std::vector<ArcId> rank_by_flow(const std::vector<Rational>& flows,
                                std::vector<ArcId> arcs) {
  std::stable_sort(arcs.begin(), arcs.end(), [&](ArcId a, ArcId b) {
    if (flows[a] != flows[b]) return flows[a] > flows[b];
    return a < b;
  });
  return arcs;
}

}  // namespace

Rational f_top(const PathFlow& x, const std::vector<ArcId>& arcs, long r) {
  if (r < 0) throw Error(ErrorKind::kInvalidArgument, "r must be >= 0");
  std::vector<Rational> values;
  for (ArcId e : arcs) values.push_back(arc_flow_value(x, e));
  std::sort(values.begin(), values.end(), std::greater<>());
  Rational total = 0;
  for (long i = 0; i < r && i < static_cast<long>(values.size()); ++i) {
    total += values[i];
  }
  return total;
}

StructuredLambda structured_lambda(const CliqueGadget& g, const PathFlow& x,
                                   std::uint64_t budget) {
  const int n = g.graph.node_count;
  const int kp = g.params.kprime;
  Integer candidates = 0;
  for (int j = 0; j <= kp; ++j) candidates += binomial(n, j);
  if (candidates > Integer(std::to_string(budget))) {
    throw Error(ErrorKind::kEnumerationBudgetExceeded,
                "structured family exceeds budget");
  }
  int arc_count = g.instance.arc_count();
  const auto flows = x.arc_flows(arc_count);
  const auto ranked = rank_by_flow(flows, g.roles.f_arcs);

  std::optional<StructuredLambda> best;
  // Subsets of size 0..k' in lexicographic order of their sorted members.
  std::vector<int> u;
  auto visit = [&](const std::vector<int>& subset) {
    const long k_u = forced_arc_count(g, subset);
    if (k_u > g.params.k) return;
    const long rest = g.params.k - k_u;
    std::vector<ArcId> f_star(ranked.begin(), ranked.begin() + rest);
    std::sort(f_star.begin(), f_star.end());
    Scenario s = structured_scenario(g, subset, f_star);
    Rational value = destroyed_value(x, s);
    const bool wins = !best || value > best->lambda ||
                      (value == best->lambda && subset < best->u);
    if (wins) {
      best = StructuredLambda{std::move(value), subset, std::move(f_star),
                              std::move(s)};
    }
  };
  auto recurse = [&](auto&& self, int start) -> void {
    visit(u);
    if (static_cast<int>(u.size()) == kp) return;
    for (int v = start; v < n; ++v) {
      u.push_back(v);
      self(self, v + 1);
      u.pop_back();
    }
  };
  recurse(recurse, 0);
  if (!best) {
    throw Error(ErrorKind::kSizeMismatch, "no structured scenario fits k");
  }
  return *best;
}

// --- Arc-disjoint paths ------------------------------------------------------

namespace {

void require_terminals(const SimpleGraph& g, int s1, int t1, int s2, int t2) {
  for (int v : {s1, t1, s2, t2}) {
    if (v < 0 || v >= g.node_count) {
      throw Error(ErrorKind::kInvalidTerminals,
                  "terminal " + std::to_string(v) + " is not a node of G'");
    }
  }
  if (s1 == t1 || s2 == t2) {
    throw Error(ErrorKind::kInvalidTerminals,
                "each terminal pair needs distinct endpoints");
  }
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= g.node_count || b >= g.node_count || a == b) {
      throw Error(ErrorKind::kInvalidArgument, "bad arc in G'");
    }
  }
}

Instance terminal_instance(const SimpleGraph& g, int from, int to) {
  Instance inst(g.node_count, from, to, 0);
  for (auto [a, b] : g.edges) inst.add_arc(a, b, 1);
  return inst;
}

}  // namespace

AdpGadget build_adp_gadget(const SimpleGraph& digraph, int s1, int t1, int s2,
                           int t2) {
  require_terminals(digraph, s1, t1, s2, t2);
  AdpGadget g;
  g.graph = digraph;
  AdpRoles& r = g.roles;
  Instance inst(digraph.node_count, 0, 0, 2);
  for (auto [a, b] : digraph.edges) inst.add_arc(a, b, 1);
  r.s = inst.add_node();
  r.t = inst.add_node();
  r.v = inst.add_node();
  r.v_prime = inst.add_node();
  r.v_second = inst.add_node();
  r.w = inst.add_node();
  r.s1 = s1;
  r.t1 = t1;
  r.s2 = s2;
  r.t2 = t2;
  r.s_v = inst.add_arc(r.s, r.v, 3);
  r.s_v_prime = inst.add_arc(r.s, r.v_prime, 1);
  r.s_v_second = inst.add_arc(r.s, r.v_second, 1);
  r.v_s1 = inst.add_arc(r.v, s1, 1);
  r.v_v_prime = inst.add_arc(r.v, r.v_prime, 1);
  r.v_v_second = inst.add_arc(r.v, r.v_second, 1);
  r.v_prime_t = inst.add_arc(r.v_prime, r.t, 2);
  r.v_second_t = inst.add_arc(r.v_second, r.t, 2);
  r.s_w = inst.add_arc(r.s, r.w, 1);
  r.t1_w = inst.add_arc(t1, r.w, 1);
  r.w_t = inst.add_arc(r.w, r.t, 2);
  r.s_s2 = inst.add_arc(r.s, s2, 1);
  r.t2_t = inst.add_arc(t2, r.t, 1);

  Instance final_inst(inst.node_count(), r.s, r.t, 2);
  for (const Arc& a : inst.arcs()) final_inst.add_arc(a.tail, a.head, a.capacity);
  g.instance = std::move(final_inst);
  return g;
}

std::optional<std::pair<Path, Path>> disjoint_paths_oracle(
    const SimpleGraph& digraph, int s1, int t1, int s2, int t2,
    std::uint64_t budget) {
  require_terminals(digraph, s1, t1, s2, t2);
  auto paths_between = [&](int from, int to) {
    try {
      return enumerate_paths(terminal_instance(digraph, from, to),
                             static_cast<std::size_t>(budget));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kPathLimitExceeded) {
        throw Error(ErrorKind::kEnumerationBudgetExceeded, e.what());
      }
      throw;
    }
  };
  const auto first = paths_between(s1, t1);
  const auto second = paths_between(s2, t2);
  for (const Path& p1 : first) {
    for (const Path& p2 : second) {
      const bool shared = std::any_of(p1.arcs.begin(), p1.arcs.end(),
                                      [&](ArcId e) { return p2.contains(e); });
      if (!shared) return std::make_pair(p1, p2);
    }
  }
  return std::nullopt;
}

PathFlow adp_witness_flow(const AdpGadget& g, const Path& p1, const Path& p2) {
  const AdpRoles& r = g.roles;
  if (!is_simple_st_path(terminal_instance(g.graph, r.s1, r.t1), p1) ||
      !is_simple_st_path(terminal_instance(g.graph, r.s2, r.t2), p2)) {
    throw Error(ErrorKind::kInvalidArgument,
                "witness paths must be terminal paths of G'");
  }
  for (ArcId e : p1.arcs) {
    if (p2.contains(e)) {
      throw Error(ErrorKind::kNotDisjoint,
                  "witness paths share arc " + std::to_string(e));
    }
  }
  PathFlow x;
  Path first{{r.s_v, r.v_s1}};
  first.arcs.insert(first.arcs.end(), p1.arcs.begin(), p1.arcs.end());
  first.arcs.push_back(r.t1_w);
  first.arcs.push_back(r.w_t);
  Path second{{r.s_s2}};
  second.arcs.insert(second.arcs.end(), p2.arcs.begin(), p2.arcs.end());
  second.arcs.push_back(r.t2_t);
  x.add(first, 1);
  x.add(second, 1);
  x.add(Path{{r.s_v_prime, r.v_prime_t}}, 1);
  x.add(Path{{r.s_v_second, r.v_second_t}}, 1);
  x.add(Path{{r.s_v, r.v_v_prime, r.v_prime_t}}, 1);
  x.add(Path{{r.s_v, r.v_v_second, r.v_second_t}}, 1);
  x.add(Path{{r.s_w, r.w_t}}, 1);
  return x;
}

}  // namespace robustflow
