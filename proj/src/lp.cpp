#include "robustflow/lp.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "robustflow/error.hpp"
#include "robustflow/simplex.hpp"

namespace robustflow {

namespace {

void for_each_subset(int m, int k,
                     const std::function<void(const std::vector<ArcId>&)>& fn) {
  std::vector<ArcId> chosen(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) chosen[i] = i;
  if (k > m) return;
  for (;;) {
    fn(chosen);
    int i = k - 1;
    while (i >= 0 && chosen[i] == m - k + i) --i;
    if (i < 0) return;
    ++chosen[i];
    for (int j = i + 1; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

void check_budget(const Instance& inst, std::uint64_t budget) {
  if (binomial(inst.arc_count(), inst.k()) > Integer(std::to_string(budget))) {
    throw Error(ErrorKind::kEnumerationBudgetExceeded,
                "C(" + std::to_string(inst.arc_count()) + ", " +
                    std::to_string(inst.k()) + ") scenarios exceed budget " +
                    std::to_string(budget));
  }
}

void check_finite(const Instance& inst) {
  if (inst.has_infinite_capacity()) {
    throw Error(ErrorKind::kInfiniteCapacity,
                "path LP needs finite capacities; finitize first");
  }
}

// The path LP over a fixed path list. Columns: one per path, then the two
// halves of the free variable lambda.
class PathLp {
 public:
  PathLp(const Instance& inst, std::vector<Path> paths)
      : inst_(inst), paths_(std::move(paths)) {
    paths_on_arc_.resize(static_cast<std::size_t>(inst.arc_count()));
    for (std::size_t p = 0; p < paths_.size(); ++p) {
      problem_.add_var(1);
      for (ArcId e : paths_[p].arcs) {
        paths_on_arc_[e].push_back(static_cast<int>(p));
      }
    }
    lambda_plus_ = problem_.add_var(-1);
    lambda_minus_ = problem_.add_var(1);
    for (const Arc& a : inst.arcs()) {
      lp::Row row;
      for (int p : paths_on_arc_[a.id]) row.coeffs.emplace_back(p, 1);
      row.rhs = a.capacity.value();
      problem_.add_row(std::move(row));
    }
  }

  void add_scenario(const Scenario& s) {
    std::set<int> hit;
    for (ArcId e : s.arcs) {
      hit.insert(paths_on_arc_[e].begin(), paths_on_arc_[e].end());
    }
    lp::Row row;
    for (int p : hit) row.coeffs.emplace_back(p, 1);
    row.coeffs.emplace_back(lambda_plus_, -1);
    row.coeffs.emplace_back(lambda_minus_, 1);
    scenario_rows_.emplace_back(s, static_cast<int>(problem_.rows.size()));
    problem_.add_row(std::move(row));
  }

  // 0 <= lambda <= sum x(P); keeps a scenario-free master bounded.
  void add_lambda_bounds() {
    lp::Row lower;
    lower.coeffs = {{lambda_plus_, -1}, {lambda_minus_, 1}};
    problem_.add_row(std::move(lower));
    lp::Row upper;
    for (std::size_t p = 0; p < paths_.size(); ++p) {
      upper.coeffs.emplace_back(static_cast<int>(p), -1);
    }
    upper.coeffs.emplace_back(lambda_plus_, 1);
    upper.coeffs.emplace_back(lambda_minus_, -1);
    problem_.add_row(std::move(upper));
    has_bounds_ = true;
  }

  void fix_nominal(const Rational& value) {
    lp::Row row;
    for (std::size_t p = 0; p < paths_.size(); ++p) {
      row.coeffs.emplace_back(static_cast<int>(p), 1);
    }
    row.sense = lp::Sense::kEqual;
    row.rhs = value;
    problem_.add_row(std::move(row));
    fixed_ = true;
  }

  struct Result {
    PrimalSolution primal;
    std::optional<DualSolution> dual;
  };

  Result solve() const {
    const lp::Solution sol = lp::solve(problem_);
    if (sol.status != lp::Status::kOptimal) {
      throw Error(fixed_ ? ErrorKind::kNotFeasible : ErrorKind::kSolverFailure,
                  sol.status == lp::Status::kInfeasible
                      ? "path LP infeasible"
                      : "path LP unbounded");
    }
    Result out;
    for (std::size_t p = 0; p < paths_.size(); ++p) {
      out.primal.x.add(paths_[p], sol.x[p]);
    }
    out.primal.lambda = sol.x[lambda_plus_] - sol.x[lambda_minus_];
    out.primal.objective = sol.objective;
    if (!has_bounds_ && !fixed_) {
      DualSolution dual;
      dual.y.assign(sol.dual.begin(), sol.dual.begin() + inst_.arc_count());
      for (const auto& [scenario, row] : scenario_rows_) {
        if (sgn(sol.dual[row]) != 0) dual.z.emplace(scenario, sol.dual[row]);
      }
      out.dual = std::move(dual);
    }
    return out;
  }

  std::size_t scenario_count() const { return scenario_rows_.size(); }

 private:
  const Instance& inst_;
  std::vector<Path> paths_;
  std::vector<std::vector<int>> paths_on_arc_;
  lp::Problem problem_;
  int lambda_plus_ = 0;
  int lambda_minus_ = 0;
  std::vector<std::pair<Scenario, int>> scenario_rows_;
  bool has_bounds_ = false;
  bool fixed_ = false;
};

}  // namespace

SolveReport solve_full_lp(const Instance& inst, const LpOptions& options) {
  require_valid(inst);
  check_finite(inst);
  check_budget(inst, options.scenario_budget);
  PathLp lp(inst, enumerate_paths(inst, options.path_limit));
  for_each_subset(inst.arc_count(), inst.k(),
                  [&](const std::vector<ArcId>& arcs) {
                    lp.add_scenario(Scenario{arcs});
                  });
  if (options.fixed_nominal) lp.fix_nominal(*options.fixed_nominal);
  auto result = lp.solve();

  SolveReport report;
  report.worst_scenario = worst_case_scenario(inst, result.primal.x,
                                              options.scenario_budget,
                                              options.threads)
                              .scenario;
  report.primal = std::move(result.primal);
  report.dual = std::move(result.dual);
  report.iterations = 1;
  report.scenarios_generated = static_cast<int>(lp.scenario_count());
  report.master_objectives.push_back(report.primal.objective);
  return report;
}

SolveReport solve_row_generation(const Instance& inst,
                                 const LpOptions& options) {
  require_valid(inst);
  check_finite(inst);
  const auto paths = enumerate_paths(inst, options.path_limit);
  std::vector<Scenario> generated;

  auto build = [&](bool with_bounds) {
    PathLp lp(inst, paths);
    for (const Scenario& s : generated) lp.add_scenario(s);
    if (with_bounds) lp.add_lambda_bounds();
    if (options.fixed_nominal) lp.fix_nominal(*options.fixed_nominal);
    return lp;
  };

  SolveReport report;
  for (;;) {
    ++report.iterations;
    auto result = build(generated.empty()).solve();
    report.master_objectives.push_back(result.primal.objective);
    const WorstCase wc = worst_case_scenario(
        inst, result.primal.x, options.scenario_budget, options.threads);
    if (wc.lambda > result.primal.lambda) {
      if (std::find(generated.begin(), generated.end(), wc.scenario) !=
          generated.end()) {
        throw Error(ErrorKind::kSolverFailure,
                    "separation returned an existing scenario");
      }
      generated.push_back(wc.scenario);
      continue;
    }
    if (generated.empty()) {
      // Certify with one scenario row so that lambda is free and the final
      // basis yields a dual solution; the optimum is unchanged.
      generated.push_back(wc.scenario);
      ++report.iterations;
      result = build(false).solve();
      report.master_objectives.push_back(result.primal.objective);
    }
    report.worst_scenario = wc.scenario;
    report.primal = std::move(result.primal);
    report.dual = std::move(result.dual);
    break;
  }
  report.scenarios_generated = static_cast<int>(generated.size());
  return report;
}

bool verify_duality(const SolveReport& report, const Instance& inst,
                    std::size_t path_limit) {
  if (!report.dual) return false;
  const DualSolution& dual = *report.dual;
  if (static_cast<int>(dual.y.size()) != inst.arc_count()) return false;
  Rational z_total = 0;
  for (const auto& [scenario, value] : dual.z) {
    if (value < 0) return false;
    if (static_cast<int>(scenario.arcs.size()) != inst.k()) return false;
    for (ArcId e : scenario.arcs) {
      if (e < 0 || e >= inst.arc_count()) return false;
    }
    z_total += value;
  }
  if (z_total != 1) return false;
  Rational objective = 0;
  for (const Arc& a : inst.arcs()) {
    const Rational& y = dual.y[a.id];
    if (y < 0) return false;
    if (y == 0) continue;
    if (a.capacity.is_infinite()) return false;
    objective += a.capacity.value() * y;
  }
  if (objective != report.primal.objective) return false;
  return !dual_separation(inst, enumerate_paths(inst, path_limit), dual.y,
                          dual.z)
              .has_value();
}

std::optional<SeparationResult> dual_separation(
    const Instance& inst, const std::vector<Path>& paths,
    const std::vector<Rational>& y, const std::map<Scenario, Rational>& z) {
  if (static_cast<int>(y.size()) != inst.arc_count()) {
    throw Error(ErrorKind::kInvalidArgument, "y must have one entry per arc");
  }
  std::optional<SeparationResult> best;
  for (const Path& path : paths) {
    Rational lhs = 0;
    for (ArcId e : path.arcs) lhs += y[e];
    for (const auto& [scenario, value] : z) {
      const bool meets = std::any_of(
          path.arcs.begin(), path.arcs.end(),
          [&](ArcId e) { return scenario.contains(e); });
      if (meets) lhs += value;
    }
    if (lhs < 1 && (!best || lhs < best->lhs)) {
      best = SeparationResult{path, lhs};
    }
  }
  return best;
}

}  // namespace robustflow
