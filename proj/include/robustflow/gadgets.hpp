#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "robustflow/graph.hpp"
#include "robustflow/robust_eval.hpp"

namespace robustflow {

// Simple graph given by node count and endpoint pairs. Whether the pairs are
// read as undirected edges or directed arcs depends on the consumer.
struct SimpleGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
};

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);

// --- Clique reduction --------------------------------------------------------

struct CliqueParams {
  int kprime = 0;
  long ell = 0;   // |V'| + 2|E'|
  long k = 0;     // k' ell + (|V'| - k') + 2|E'|
  Rational eps;   // 1 / ell
  Rational big_m; // (1 + eps) k
  long h = 0;     // 2 C(k', 2) - 2: number of parallel arcs with capacity 1+eps
};

struct CliqueRoles {
  NodeId s = 0, t = 0;
  NodeId v_prime = 0, v_second = 0;          // v', v''
  std::vector<NodeId> a;                     // a_v per vertex
  std::vector<std::vector<NodeId>> a_group;  // A_v = {a_{v,1..ell}}
  std::vector<std::vector<NodeId>> b_group;  // B_v = {b_{v,1..ell}}
  std::vector<NodeId> a_edge1, a_edge2;      // a'_e, a''_e per edge

  std::vector<std::vector<ArcId>> hub_arcs;   // a_v -> b_{v,i}, capacity M
  std::vector<std::vector<ArcId>> unit_arcs;  // a_{v,i} -> b_{v,i}, capacity 1
  // Per edge {u, w}: a'_e->b_{u,i}, a''_e->b_{u,i}, a'_e->b_{w,i},
  // a''_e->b_{w,i} for i = 1..ell, capacity M.
  std::vector<std::vector<ArcId>> edge_arcs;
  std::map<NodeId, ArcId> source_arc;  // (s, a) for every a in A
  std::map<NodeId, ArcId> sink_arc;    // (b, t) for every b in B
  std::vector<ArcId> parallel;         // e_1..e_k
  ArcId e1_prime = 0, e2_prime = 0;    // s -> v'
  ArcId e1_second = 0, e2_second = 0;  // v'' -> t
  ArcId s_to_v_second = 0, v_prime_to_t = 0, v_prime_to_v_second = 0;
  std::vector<ArcId> h_arcs;  // E_H
  std::vector<ArcId> f_arcs;  // F = {e_1..e_k} + E_H, ascending
};

struct CliqueGadget {
  SimpleGraph graph;
  Instance instance;
  CliqueParams params;
  CliqueRoles roles;

  // (|V'| + 4|E'|) ell: number of A x B arcs of capacity M.
  long saturated_m_paths() const;
};

// Throws Error(kInvalidCliqueSize) unless 2 <= k' <= |V'|, and
// Error(kInvalidArgument) if the graph has loops, repeats or bad endpoints.
CliqueGadget build_clique_gadget(const SimpleGraph& graph, int kprime);

// max |E'[U]| over U with |U| <= k'. Exhaustive; throws
// Error(kEnumerationBudgetExceeded) when 2^|V'| > budget.
int h_star(const SimpleGraph& graph, int kprime,
           std::uint64_t budget = 1000000);

// |E'[U]| for a vertex set U.
int induced_edge_count(const SimpleGraph& graph, const std::vector<int>& u);

enum class HVariant { kZeroRoute, kEpsRoute };

// Saturates every A x B arc and every e_i along its unique path; the subgraph
// H carries either the maximum flow avoiding (v', v'') or the flow that
// routes eps over (v', v'').
PathFlow canonical_gadget_flow(const CliqueGadget& g, HVariant variant);

// k_U = ell |U| + |V'| - |U| + 2(|E'| - |E'[U]|).
long forced_arc_count(const CliqueGadget& g, const std::vector<int>& u);

// The scenario B_v (v in U) + a_v (v not in U) + a'_e, a''_e (e not inside
// U) + f_star, with node symbols resolved to their sink/source arcs.
// Throws Error(kSizeMismatch) if the result does not have exactly k arcs.
Scenario structured_scenario(const CliqueGadget& g, const std::vector<int>& u,
                             const std::vector<ArcId>& f_star);

// Sum of the r largest arc flows among `arcs`.
Rational f_top(const PathFlow& x, const std::vector<ArcId>& arcs, long r);

struct StructuredLambda {
  Rational lambda = 0;
  std::vector<int> u;
  std::vector<ArcId> f_star;
  Scenario scenario;
};

// Best destroyed value over the structured family: every U with |U| <= k'
// and k_U <= k, completed by the k - k_U arcs of F with the largest flow
// (smallest id on ties). Ties across U go to the lexicographically smallest
// U. This is the adversary of the reduction's analysis, not an unconditional
// worst case. Throws Error(kEnumerationBudgetExceeded) if there are more
// than `budget` candidate sets U.
StructuredLambda structured_lambda(const CliqueGadget& g, const PathFlow& x,
                                   std::uint64_t budget = 1000000);

// --- Arc-disjoint paths reduction --------------------------------------------

struct AdpRoles {
  NodeId s = 0, t = 0, v = 0, v_prime = 0, v_second = 0, w = 0;
  NodeId s1 = 0, t1 = 0, s2 = 0, t2 = 0;
  ArcId s_v = 0, s_v_prime = 0, s_v_second = 0, v_s1 = 0, v_v_prime = 0,
        v_v_second = 0, v_prime_t = 0, v_second_t = 0, s_w = 0, t1_w = 0,
        w_t = 0, s_s2 = 0, t2_t = 0;
};

struct AdpGadget {
  SimpleGraph graph;
  Instance instance;
  AdpRoles roles;
};

// Keeps G' (nodes and arcs, ids unchanged, unit capacities) and adds
// s, t, v, v', v'', w with 13 arcs; k = 2. Throws Error(kInvalidTerminals).
AdpGadget build_adp_gadget(const SimpleGraph& digraph, int s1, int t1, int s2,
                           int t2);

// First arc-disjoint pair (s1-t1 path, s2-t2 path) of G' in lexicographic
// pair order, or nullopt. Paths are arc-id sequences of G'. Throws
// Error(kEnumerationBudgetExceeded) when either path family exceeds budget.
std::optional<std::pair<Path, Path>> disjoint_paths_oracle(
    const SimpleGraph& digraph, int s1, int t1, int s2, int t2,
    std::uint64_t budget = 100000);

// The seven unit paths built from an arc-disjoint pair. Throws
// Error(kNotDisjoint) if the pair shares an arc and Error(kInvalidArgument)
// if either is not a terminal path of G'.
PathFlow adp_witness_flow(const AdpGadget& g, const Path& p1, const Path& p2);

}  // namespace robustflow
