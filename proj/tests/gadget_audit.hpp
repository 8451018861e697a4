#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "robustflow/gadgets.hpp"

namespace audit {

using namespace robustflow;

// Recomputes every construction formula from |V'|, |E'| and k' and compares
// arc by arc. Returns human-readable mismatches; empty means clean.
inline std::vector<std::string> clique_gadget(const CliqueGadget& g) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const long nv = g.graph.node_count;
  const long ne = static_cast<long>(g.graph.edges.size());
  const long kp = g.params.kprime;
  const long ell = nv + 2 * ne;
  const long k = kp * ell + (nv - kp) + 2 * ne;
  Rational eps(1, ell);
  Rational big_m = (1 + eps) * k;
  const long h = kp * (kp - 1) - 2;
  const Instance& inst = g.instance;
  const CliqueRoles& r = g.roles;
  const Capacity inf = Capacity::infinite();

  expect(g.params.ell == ell, "ell");
  expect(g.params.k == k, "k");
  expect(inst.k() == k, "instance k");
  expect(g.params.eps == eps, "eps");
  expect(g.params.big_m == big_m, "M");
  expect(g.params.h == h, "h");
  expect(inst.source() == r.s && inst.sink() == r.t, "terminals");
  expect(inst.node_count() == 4 + nv + 2 * ell * nv + 2 * ne, "node count");
  const long arcs = (2 * nv + 4 * ne) * ell + (nv + ell * nv + 2 * ne) +
                    ell * nv + k + 7;
  expect(inst.arc_count() == arcs, "arc count");

  std::vector<int> role_hits(inst.arc_count(), 0);
  auto arc_is = [&](ArcId id, NodeId tail, NodeId head, const Capacity& cap,
                    const std::string& what) {
    if (id < 0 || id >= inst.arc_count()) {
      bad.push_back(what + ": id out of range");
      return;
    }
    ++role_hits[id];
    const Arc& a = inst.arc(id);
    expect(a.tail == tail && a.head == head, what + ": endpoints");
    expect(a.capacity == cap, what + ": capacity");
  };

  expect(static_cast<long>(r.a.size()) == nv, "a_v count");
  for (long v = 0; v < nv; ++v) {
    expect(static_cast<long>(r.a_group[v].size()) == ell, "|A_v|");
    expect(static_cast<long>(r.b_group[v].size()) == ell, "|B_v|");
    expect(static_cast<long>(r.hub_arcs[v].size()) == ell, "hub arcs");
    expect(static_cast<long>(r.unit_arcs[v].size()) == ell, "unit arcs");
    arc_is(r.source_arc.at(r.a[v]), r.s, r.a[v], inf, "(s,a_v)");
    for (long i = 0; i < ell; ++i) {
      NodeId av = r.a_group[v][i], bv = r.b_group[v][i];
      arc_is(r.hub_arcs[v][i], r.a[v], bv, big_m, "(a_v,b_vi)");
      arc_is(r.unit_arcs[v][i], av, bv, 1, "(a_vi,b_vi)");
      arc_is(r.source_arc.at(av), r.s, av, inf, "(s,a_vi)");
      arc_is(r.sink_arc.at(bv), bv, r.t, inf, "(b_vi,t)");
    }
  }
  expect(static_cast<long>(r.edge_arcs.size()) == ne, "edge arc groups");
  for (long e = 0; e < ne; ++e) {
    auto [u, w] = g.graph.edges[e];
    arc_is(r.source_arc.at(r.a_edge1[e]), r.s, r.a_edge1[e], inf, "(s,a'_e)");
    arc_is(r.source_arc.at(r.a_edge2[e]), r.s, r.a_edge2[e], inf,
           "(s,a''_e)");
    std::multiset<std::pair<NodeId, NodeId>> want, got;
    for (NodeId tail : {r.a_edge1[e], r.a_edge2[e]}) {
      for (int end : {u, w}) {
        for (long i = 0; i < ell; ++i) want.emplace(tail, r.b_group[end][i]);
      }
    }
    for (ArcId id : r.edge_arcs[e]) {
      const Arc& a = inst.arc(id);
      got.emplace(a.tail, a.head);
      ++role_hits[id];
      expect(a.capacity == Capacity(big_m), "edge arc capacity");
    }
    expect(want == got, "edge arcs endpoints");
  }
  expect(static_cast<long>(r.source_arc.size()) == nv + ell * nv + 2 * ne,
         "|s->A|");
  expect(static_cast<long>(r.sink_arc.size()) == ell * nv, "|B->t|");

  expect(static_cast<long>(r.parallel.size()) == k, "parallel count");
  for (long i = 0; i < static_cast<long>(r.parallel.size()); ++i) {
    arc_is(r.parallel[i], r.s, r.t,
           i < h ? Capacity(Rational(1 + eps)) : Capacity(1), "e_i");
  }
  arc_is(r.e1_prime, r.s, r.v_prime, 1, "e'_1");
  arc_is(r.e2_prime, r.s, r.v_prime, eps, "e'_2");
  arc_is(r.e1_second, r.v_second, r.t, 1, "e''_1");
  arc_is(r.e2_second, r.v_second, r.t, eps, "e''_2");
  arc_is(r.s_to_v_second, r.s, r.v_second, Rational(1 + eps), "(s,v'')");
  arc_is(r.v_prime_to_t, r.v_prime, r.t, Rational(1 + eps), "(v',t)");
  arc_is(r.v_prime_to_v_second, r.v_prime, r.v_second, eps, "(v',v'')");
  for (int hits : role_hits) expect(hits == 1, "arc role partition");

  std::vector<ArcId> h_want{r.e1_prime,      r.e2_prime,    r.e1_second,
                            r.e2_second,     r.s_to_v_second, r.v_prime_to_t,
                            r.v_prime_to_v_second};
  std::vector<ArcId> h_got = r.h_arcs;
  std::sort(h_want.begin(), h_want.end());
  std::sort(h_got.begin(), h_got.end());
  expect(h_got == h_want, "E_H");
  std::vector<ArcId> f_want = r.parallel;
  f_want.insert(f_want.end(), h_want.begin(), h_want.end());
  std::sort(f_want.begin(), f_want.end());
  expect(r.f_arcs == f_want, "F");

  // k_U arithmetic for every vertex set of size at most k'.
  for (unsigned mask = 0; mask < (1u << nv); ++mask) {
    std::vector<int> u;
    for (int v = 0; v < nv; ++v)
      if (mask >> v & 1u) u.push_back(v);
    if (static_cast<long>(u.size()) > kp) continue;
    long inside = 0;
    for (auto [a, b] : g.graph.edges)
      if ((mask >> a & 1u) && (mask >> b & 1u)) ++inside;
    const long ku = ell * static_cast<long>(u.size()) + nv -
                    static_cast<long>(u.size()) + 2 * (ne - inside);
    expect(forced_arc_count(g, u) == ku, "k_U");
    expect(induced_edge_count(g.graph, u) == inside, "|E'[U]|");
    if (ku <= k && k - ku <= static_cast<long>(r.f_arcs.size())) {
      std::vector<ArcId> fs(r.f_arcs.begin(), r.f_arcs.begin() + (k - ku));
      expect(structured_scenario(g, u, fs).arcs.size() ==
                 static_cast<std::size_t>(k),
             "structured scenario size");
    }
  }
  expect(g.saturated_m_paths() == (nv + 4 * ne) * ell, "saturated M paths");
  return bad;
}

inline std::vector<std::string> adp_gadget(const AdpGadget& g) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const Instance& inst = g.instance;
  const AdpRoles& r = g.roles;
  const int n = g.graph.node_count;
  const int m = static_cast<int>(g.graph.edges.size());
  expect(inst.node_count() == n + 6, "node count");
  expect(inst.arc_count() == m + 13, "arc count");
  expect(inst.k() == 2, "k");
  expect(inst.source() == r.s && inst.sink() == r.t, "terminals");
  for (int e = 0; e < m; ++e) {
    const Arc& a = inst.arc(e);
    expect(a.tail == g.graph.edges[e].first &&
               a.head == g.graph.edges[e].second,
           "copied arc endpoints");
    expect(a.capacity == Capacity(1), "copied arc capacity");
  }
  std::vector<int> hits(inst.arc_count(), 0);
  for (int e = 0; e < m; ++e) hits[e] = 1;
  auto arc_is = [&](ArcId id, NodeId tail, NodeId head, long cap,
                    const std::string& what) {
    ++hits[id];
    const Arc& a = inst.arc(id);
    expect(a.tail == tail && a.head == head, what + ": endpoints");
    expect(a.capacity == Capacity(cap), what + ": capacity");
  };
  arc_is(r.s_v, r.s, r.v, 3, "(s,v)");
  arc_is(r.s_v_prime, r.s, r.v_prime, 1, "(s,v')");
  arc_is(r.s_v_second, r.s, r.v_second, 1, "(s,v'')");
  arc_is(r.v_s1, r.v, r.s1, 1, "(v,s1)");
  arc_is(r.v_v_prime, r.v, r.v_prime, 1, "(v,v')");
  arc_is(r.v_v_second, r.v, r.v_second, 1, "(v,v'')");
  arc_is(r.v_prime_t, r.v_prime, r.t, 2, "(v',t)");
  arc_is(r.v_second_t, r.v_second, r.t, 2, "(v'',t)");
  arc_is(r.s_w, r.s, r.w, 1, "(s,w)");
  arc_is(r.t1_w, r.t1, r.w, 1, "(t1,w)");
  arc_is(r.w_t, r.w, r.t, 2, "(w,t)");
  arc_is(r.s_s2, r.s, r.s2, 1, "(s,s2)");
  arc_is(r.t2_t, r.t2, r.t, 1, "(t2,t)");
  for (int h : hits) expect(h == 1, "arc role partition");
  int cap2 = 0, cap3 = 0;
  for (const Arc& a : inst.arcs()) {
    if (a.capacity == Capacity(2)) ++cap2;
    if (a.capacity == Capacity(3)) ++cap3;
  }
  expect(cap2 == 3 && cap3 == 1, "capacity profile");
  return bad;
}

}  // namespace audit
