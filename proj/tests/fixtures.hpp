#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "robustflow/graph.hpp"
#include "robustflow/random_instance.hpp"
#include "robustflow/robust_eval.hpp"

namespace fixtures {

using namespace robustflow;

// s=0 a=1 b=2 t=3; arcs 0:(s,a) 1:(s,b) 2:(a,t) 3:(b,t)
inline Instance diamond(int k, long cap = 1) {
  Instance inst(4, 0, 3, k);
  inst.add_arc(0, 1, cap);
  inst.add_arc(0, 2, cap);
  inst.add_arc(1, 3, cap);
  inst.add_arc(2, 3, cap);
  return inst;
}

inline Instance parallel(int count, int k, Capacity cap = 1) {
  Instance inst(2, 0, 1, k);
  for (int i = 0; i < count; ++i) inst.add_arc(0, 1, cap);
  return inst;
}

inline Instance triple(int k, Capacity cap = 1) { return parallel(3, k, cap); }

// s=0 a=1 t=2
inline Instance chain(int k, long cap_sa, long cap_at) {
  Instance inst(3, 0, 2, k);
  inst.add_arc(0, 1, cap_sa);
  inst.add_arc(1, 2, cap_at);
  return inst;
}

inline Path path(std::vector<ArcId> arcs) { return Path{std::move(arcs)}; }

inline PathFlow flow(std::vector<std::pair<std::vector<ArcId>, Rational>> e) {
  PathFlow x;
  for (auto& [arcs, v] : e) x.add(Path{arcs}, v);
  return x;
}

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

// Oracle: max destroyed value by plain lexicographic k-combination over
// every arc, independent of the library's support-restricted search.
inline Rational oracle_lambda(const Instance& inst, const PathFlow& x) {
  const int m = inst.arc_count(), k = inst.k();
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  Rational best = 0;
  bool first = true;
  if (k > m) return 0;
  while (true) {
    Rational d = 0;
    for (const auto& [p, v] : x.entries()) {
      for (int e : idx) {
        if (p.contains(e)) {
          d += v;
          break;
        }
      }
    }
    if (first || d > best) best = d;
    first = false;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

// Oracle: number of s-t paths in a DAG by dynamic programming over a
// topological order.
inline std::uint64_t dag_path_count(const Instance& inst) {
  const int n = inst.node_count();
  std::vector<int> indeg(n, 0);
  for (const Arc& a : inst.arcs()) ++indeg[a.head];
  std::vector<int> order, stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (ArcId e : inst.out_arcs(v))
      if (--indeg[inst.arc(e).head] == 0) stack.push_back(inst.arc(e).head);
  }
  if (static_cast<int>(order.size()) != n) return UINT64_MAX;  // cyclic
  std::vector<std::uint64_t> count(n, 0);
  count[inst.source()] = 1;
  for (int v : order)
    for (ArcId e : inst.out_arcs(v)) count[inst.arc(e).head] += count[v];
  return count[inst.sink()];
}

inline bool is_dag(const Instance& inst) {
  return dag_path_count(inst) != UINT64_MAX;
}

}  // namespace fixtures
