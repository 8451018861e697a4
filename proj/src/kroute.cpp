#include "robustflow/kroute.hpp"

#include "robustflow/error.hpp"
#include "robustflow/simplex.hpp"

namespace robustflow {

UniformFlow max_uniform_flow(const Instance& inst, int h) {
  require_valid(inst);
  if (h < 1) throw Error(ErrorKind::kInvalidArgument, "h must be >= 1");
  if (inst.has_infinite_capacity()) {
    throw Error(ErrorKind::kInfiniteCapacity,
                "uniform flow LP needs finite capacities");
  }
  lp::Problem problem;
  for (int e = 0; e < inst.arc_count(); ++e) problem.add_var(0);
  const int total = problem.add_var(1);

  for (NodeId v = 0; v < inst.node_count(); ++v) {
    if (v == inst.sink()) continue;
    lp::Row row;
    row.sense = lp::Sense::kEqual;
    for (ArcId id : inst.out_arcs(v)) row.coeffs.emplace_back(id, 1);
    for (ArcId id : inst.in_arcs(v)) row.coeffs.emplace_back(id, -1);
    if (v == inst.source()) row.coeffs.emplace_back(total, -1);
    problem.add_row(std::move(row));
  }
  const Rational share(1, h);
  for (const Arc& a : inst.arcs()) {
    lp::Row cap;
    cap.coeffs.emplace_back(a.id, 1);
    cap.rhs = a.capacity.value();
    problem.add_row(std::move(cap));
    lp::Row uniform;
    uniform.coeffs = {{a.id, 1}, {total, -share}};
    problem.add_row(std::move(uniform));
  }
  const lp::Solution sol = lp::solve(problem);
  if (sol.status != lp::Status::kOptimal) {
    throw Error(ErrorKind::kSolverFailure, "uniform flow LP not optimal");
  }
  UniformFlow out;
  out.value = sol.objective;
  std::vector<Rational> arc_flow(sol.x.begin(),
                                 sol.x.begin() + inst.arc_count());
  out.flow = path_decompose(inst, arc_flow);
  return out;
}

RobustBaseline robust_baseline(const Instance& inst, int k) {
  if (k < 0) throw Error(ErrorKind::kInvalidArgument, "k must be >= 0");
  UniformFlow uniform = max_uniform_flow(inst, k + 1);
  RobustBaseline out;
  out.flow = std::move(uniform.flow);
  out.value = uniform.value;
  out.guarantee = uniform.value / (k + 1);
  return out;
}

}  // namespace robustflow
