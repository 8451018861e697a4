#include "robustflow/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "robustflow/error.hpp"
#include "robustflow/gadgets.hpp"
#include "robustflow/graph.hpp"
#include "robustflow/io.hpp"
#include "robustflow/kroute.hpp"
#include "robustflow/lp.hpp"
#include "robustflow/random_instance.hpp"
#include "robustflow/report_json.hpp"
#include "robustflow/robust_eval.hpp"
#include "robustflow/special_solvers.hpp"
#include "robustflow/transforms.hpp"

namespace robustflow::cli {

namespace {

using Json = nlohmann::json;
namespace rj = robustflow::json;

struct Globals {
  bool json = false;
  std::uint64_t budget = 1000000;
  std::size_t path_limit = 100000;
  int threads = 1;
  std::uint64_t seed = 1;
};

// Two-column table with the key column padded to its widest entry.
class Table {
 public:
  void row(std::string key, std::string value) {
    rows_.emplace_back(std::move(key), std::move(value));
  }
  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& r : rows_) width = std::max(width, r.first.size());
    for (const auto& [key, value] : rows_) {
      out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string join_arcs(const std::vector<ArcId>& arcs) {
  std::string s;
  for (ArcId e : arcs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e);
  }
  return s.empty() ? "-" : s;
}

Json arcs_json(const std::vector<ArcId>& arcs) {
  Json a = Json::array();
  for (ArcId e : arcs) a.push_back(e);
  return a;
}

Instance load_instance(const std::string& path) {
  Instance inst = io::parse_instance(io::read_file(path));
  require_valid(inst);
  return inst;
}

void print_flow(std::ostream& out, const PathFlow& flow) {
  out << "paths:\n";
  std::size_t width = 0;
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [path, value] : flow.entries()) {
    rows.emplace_back(join_arcs(path.arcs), to_string(value));
    width = std::max(width, rows.back().first.size());
  }
  for (const auto& [p, v] : rows) {
    out << "  " << p << std::string(width - p.size() + 2, ' ') << v << '\n';
  }
}

void print_report(std::ostream& out, const SolveReport& r) {
  Table t;
  t.row("objective", to_string(r.primal.objective));
  t.row("lambda", to_string(r.primal.lambda));
  t.row("nominal", to_string(nominal_value(r.primal.x)));
  t.row("worst scenario", join_arcs(r.worst_scenario.arcs));
  t.row("iterations", std::to_string(r.iterations));
  t.row("scenarios", std::to_string(r.scenarios_generated));
  t.row("dual", r.dual ? "present" : "absent");
  t.print(out);
  print_flow(out, r.primal.x);
}

int cmd_validate(const Globals& g, const std::string& path, std::ostream& out) {
  Instance inst = io::parse_instance(io::read_file(path));
  ValidationReport report = validate_instance(inst);
  bool ok = report.violations.empty();
  if (g.json) {
    Json v = Json::array();
    for (const auto& msg : report.violations) v.push_back(msg);
    out << rj::dump({{"valid", ok},
                       {"nodes", inst.node_count()},
                       {"arcs", inst.arc_count()},
                       {"k", inst.k()},
                       {"violations", v}});
  } else {
    Table t;
    t.row("status", ok ? "valid" : "invalid");
    t.row("nodes", std::to_string(inst.node_count()));
    t.row("arcs", std::to_string(inst.arc_count()));
    t.row("k", std::to_string(inst.k()));
    t.print(out);
    for (const auto& msg : report.violations) out << "violation: " << msg << '\n';
  }
  return ok ? kExitOk : kExitInput;
}

int cmd_solve_lp(const Globals& g, const std::string& path, bool rowgen,
                 std::ostream& out) {
  Instance inst = load_instance(path);
  LpOptions opts;
  opts.path_limit = g.path_limit;
  opts.scenario_budget = g.budget;
  opts.threads = g.threads;
  SolveReport r =
      rowgen ? solve_row_generation(inst, opts) : solve_full_lp(inst, opts);
  if (g.json) {
    out << rj::dump(rj::report_to_json(r));
  } else {
    print_report(out, r);
  }
  return kExitOk;
}

int cmd_solve_int(const Globals& g, const std::string& path,
                  std::ostream& out) {
  Instance inst = load_instance(path);
  bool unit = true, small = true;
  for (const Arc& a : inst.arcs()) {
    if (a.capacity.is_infinite()) {
      unit = small = false;
      break;
    }
    if (a.capacity.value() != 1) unit = false;
    if (a.capacity.value() != 1 && a.capacity.value() != 2) small = false;
  }
  std::string solver;
  IntegralSolution sol;
  if (unit) {
    solver = "unit-capacity";
    sol = solve_unit_capacity(inst);
  } else if (small) {
    solver = "capacity-two";
    sol = solve_integral_cap2(inst);
  } else {
    solver = "brute-force";
    sol = brute_force_integral(inst, g.budget, g.path_limit);
  }
  if (g.json) {
    out << rj::dump({{"solver", solver},
                       {"value", to_string(sol.value)},
                       {"nominal", to_string(nominal_value(sol.flow))},
                       {"flow", rj::path_flow_to_json(sol.flow)}});
  } else {
    Table t;
    t.row("solver", solver);
    t.row("robust value", to_string(sol.value));
    t.row("nominal", to_string(nominal_value(sol.flow)));
    t.print(out);
    print_flow(out, sol.flow);
  }
  return kExitOk;
}

PathFlow load_feasible_flow(const Instance& inst, const std::string& path) {
  PathFlow x = io::parse_path_flow(io::read_file(path));
  require_feasible(inst, x);
  return x;
}

int cmd_eval(const Globals& g, const std::string& path,
             const std::string& flow_path, std::ostream& out) {
  Instance inst = load_instance(path);
  PathFlow x = load_feasible_flow(inst, flow_path);
  WorstCase wc = worst_case_scenario(inst, x, g.budget, g.threads);
  Rational nominal = nominal_value(x);
  Rational robust = nominal - wc.lambda;
  if (g.json) {
    out << rj::dump({{"nominal", to_string(nominal)},
                       {"lambda", to_string(wc.lambda)},
                       {"robust_value", to_string(robust)},
                       {"worst_scenario", arcs_json(wc.scenario.arcs)}});
  } else {
    Table t;
    t.row("nominal", to_string(nominal));
    t.row("lambda", to_string(wc.lambda));
    t.row("robust value", to_string(robust));
    t.row("worst scenario", join_arcs(wc.scenario.arcs));
    t.print(out);
  }
  return kExitOk;
}

int cmd_worst_case(const Globals& g, const std::string& path,
                   const std::string& flow_path, std::ostream& out) {
  Instance inst = load_instance(path);
  PathFlow x = load_feasible_flow(inst, flow_path);
  WorstCase wc = worst_case_scenario(inst, x, g.budget, g.threads);
  if (g.json) {
    out << rj::dump({{"scenario", arcs_json(wc.scenario.arcs)},
                       {"lambda", to_string(wc.lambda)}});
  } else {
    out << io::format_scenario(wc.scenario.arcs);
    Table t;
    t.row("lambda", to_string(wc.lambda));
    t.print(out);
  }
  return kExitOk;
}

// Writes the instance either to `out_path` or, when empty, to the stream.
void emit_instance(const Instance& inst, const std::string& out_path,
                   std::ostream& out, bool to_stream) {
  std::string text = io::format_instance(inst);
  if (!out_path.empty()) io::write_file(out_path, text);
  if (to_stream) out << text;
}

int emit_with_sidecar(const Globals& g, const Instance& inst,
                      const Json& sidecar, const std::string& out_path,
                      const std::string& sidecar_path, std::ostream& out) {
  if (!sidecar_path.empty()) io::write_file(sidecar_path, rj::dump(sidecar));
  if (g.json) {
    emit_instance(inst, out_path, out, false);
    out << rj::dump({{"instance", io::format_instance(inst)},
                       {"sidecar", sidecar}});
  } else {
    emit_instance(inst, out_path, out, out_path.empty());
    if (!out_path.empty()) {
      Table t;
      t.row("nodes", std::to_string(inst.node_count()));
      t.row("arcs", std::to_string(inst.arc_count()));
      t.row("k", std::to_string(inst.k()));
      t.print(out);
    }
  }
  return kExitOk;
}

int cmd_transform(const Globals& g, const std::string& path,
                  const std::string& mode, const std::string& out_path,
                  const std::string& sidecar_path, std::ostream& out) {
  Instance inst = load_instance(path);
  if (mode == "split") {
    SplitResult r = split_capacities(inst);
    return emit_with_sidecar(g, r.instance,
                             {{"mode", "split"},
                              {"arc_map", rj::arc_map_to_json(r.arc_map)}},
                             out_path, sidecar_path, out);
  }
  if (mode == "finitize") {
    Instance f = finitize_infinities(inst);
    std::vector<ArcId> replaced;
    for (const Arc& a : inst.arcs()) {
      if (a.capacity.is_infinite()) replaced.push_back(a.id);
    }
    return emit_with_sidecar(
        g, f, {{"mode", "finitize"}, {"replaced", arcs_json(replaced)}},
        out_path, sidecar_path, out);
  }
  ScaleResult r = scale_to_integral(inst);
  return emit_with_sidecar(g, r.instance,
                           {{"mode", "scale"}, {"scale", r.scale.get_str()}},
                           out_path, sidecar_path, out);
}

int cmd_gadget_clique(const Globals& g, const std::string& graph_path,
                      int kprime, const std::string& out_path,
                      const std::string& roles_path, std::ostream& out) {
  SimpleGraph graph = io::parse_graph(io::read_file(graph_path));
  CliqueGadget gadget = build_clique_gadget(graph, kprime);
  return emit_with_sidecar(g, gadget.instance,
                           rj::clique_roles_to_json(gadget), out_path,
                           roles_path, out);
}

int cmd_gadget_adp(const Globals& g, const std::string& graph_path,
                   const std::vector<int>& terminals,
                   const std::string& out_path, const std::string& roles_path,
                   std::ostream& out) {
  SimpleGraph graph = io::parse_graph(io::read_file(graph_path));
  AdpGadget gadget = build_adp_gadget(graph, terminals[0], terminals[1],
                                      terminals[2], terminals[3]);
  return emit_with_sidecar(g, gadget.instance, rj::adp_roles_to_json(gadget),
                           out_path, roles_path, out);
}

int cmd_approx(const Globals& g, const std::string& path, int k,
               std::ostream& out) {
  Instance inst = load_instance(path);
  if (k < 0 || k > inst.arc_count()) {
    throw Error(ErrorKind::kInvalidArgument, "--k must lie in [0, arc count]");
  }
  inst.set_k(k);
  RobustBaseline base = robust_baseline(inst, k);
  WorstCase wc = worst_case_scenario(inst, base.flow, g.budget, g.threads);
  SolveReport r;
  r.primal.x = base.flow;
  r.primal.lambda = wc.lambda;
  r.primal.objective = nominal_value(base.flow) - wc.lambda;
  r.worst_scenario = wc.scenario;
  if (g.json) {
    Json j = rj::report_to_json(r);
    j["value"] = to_string(base.value);
    j["guarantee"] = to_string(base.guarantee);
    out << rj::dump(j);
  } else {
    print_report(out, r);
    Table t;
    t.row("uniform value", to_string(base.value));
    t.row("guarantee", to_string(base.guarantee));
    t.print(out);
  }
  return kExitOk;
}

int cmd_generate(const Globals& g, const std::string& profile,
                 std::ostream& out) {
  RandomInstanceOptions opts;
  if (profile == "unit") {
    opts.capacities = {1};
  } else if (profile == "cap2") {
    opts.capacities = {1, 2};
    opts.max_arcs = 10;
    opts.max_k = 3;
  }
  std::mt19937_64 rng(g.seed);
  Instance inst = random_instance(rng, opts);
  if (g.json) {
    out << rj::dump({{"seed", g.seed},
                       {"profile", profile},
                       {"instance", io::format_instance(inst)}});
  } else {
    out << io::format_instance(inst);
  }
  return kExitOk;
}

void report_failure(std::ostream& err, std::string_view kind,
                    const std::string& message) {
  err << Json({{"error", std::string(kind)}, {"message", message}}).dump()
      << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact robust s-t flow toolkit", "robustflow"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text tables");
  app.add_option("--budget", g.budget, "Enumeration budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--path-limit", g.path_limit, "Maximum number of s-t paths")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads")
      ->check(CLI::Range(1, 256));
  app.add_option("--seed", g.seed, "Seed for instance generation");

  std::string instance_path, flow_path, mode = "split", out_path, sidecar_path,
                             graph_path, profile = "default";
  bool rowgen = false;
  int kprime = 0, k = 0;
  std::vector<int> terminals;

  auto* validate_cmd = app.add_subcommand("validate", "Check an instance");
  validate_cmd->add_option("instance", instance_path)->required();

  auto* lp_cmd = app.add_subcommand("solve-lp", "Solve the path LP exactly");
  lp_cmd->add_option("instance", instance_path)->required();
  lp_cmd->add_flag("--rowgen", rowgen, "Add scenario rows lazily");

  auto* int_cmd =
      app.add_subcommand("solve-int", "Best integral robust path flow");
  int_cmd->add_option("instance", instance_path)->required();

  auto* eval_cmd = app.add_subcommand("eval", "Robust value of a path flow");
  eval_cmd->add_option("instance", instance_path)->required();
  eval_cmd->add_option("--flow", flow_path)->required();

  auto* wc_cmd =
      app.add_subcommand("worst-case", "Worst k-arc failure for a path flow");
  wc_cmd->add_option("instance", instance_path)->required();
  wc_cmd->add_option("--flow", flow_path)->required();

  auto* tr_cmd = app.add_subcommand("transform", "Rewrite an instance");
  tr_cmd->add_option("instance", instance_path)->required();
  tr_cmd->add_option("--mode", mode)
      ->check(CLI::IsMember({"split", "finitize", "scale"}));
  tr_cmd->add_option("--out", out_path, "Instance output file");
  tr_cmd->add_option("--sidecar", sidecar_path, "JSON sidecar output file");

  auto* gadget_cmd = app.add_subcommand("gadget", "Build reduction instances");
  gadget_cmd->require_subcommand(1);
  auto* clique_cmd = gadget_cmd->add_subcommand("clique", "Clique reduction");
  clique_cmd->add_option("--graph", graph_path)->required();
  clique_cmd->add_option("--kprime", kprime)->required();
  clique_cmd->add_option("--out", out_path, "Instance output file");
  clique_cmd->add_option("--roles", sidecar_path, "JSON roles output file");
  auto* adp_cmd =
      gadget_cmd->add_subcommand("adp", "Arc-disjoint paths reduction");
  adp_cmd->add_option("--graph", graph_path)->required();
  adp_cmd->add_option("--terminals", terminals)->required()->expected(4);
  adp_cmd->add_option("--out", out_path, "Instance output file");
  adp_cmd->add_option("--roles", sidecar_path, "JSON roles output file");

  auto* approx_cmd = app.add_subcommand("approx", "Approximation baselines");
  approx_cmd->require_subcommand(1);
  auto* kroute_cmd =
      approx_cmd->add_subcommand("kroute", "Uniform (k+1)-route baseline");
  kroute_cmd->add_option("instance", instance_path)->required();
  kroute_cmd->add_option("--k", k)->required();

  auto* gen_cmd = app.add_subcommand("generate", "Random instance");
  gen_cmd->add_option("--profile", profile)
      ->check(CLI::IsMember({"default", "unit", "cap2"}));

  // CLI11 consumes a reversed argument vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_failure(err, "UsageError", e.what());
    return kExitInput;
  }

  try {
    if (*validate_cmd) return cmd_validate(g, instance_path, out);
    if (*lp_cmd) return cmd_solve_lp(g, instance_path, rowgen, out);
    if (*int_cmd) return cmd_solve_int(g, instance_path, out);
    if (*eval_cmd) return cmd_eval(g, instance_path, flow_path, out);
    if (*wc_cmd) return cmd_worst_case(g, instance_path, flow_path, out);
    if (*tr_cmd) {
      return cmd_transform(g, instance_path, mode, out_path, sidecar_path,
                           out);
    }
    if (*clique_cmd) {
      return cmd_gadget_clique(g, graph_path, kprime, out_path, sidecar_path,
                               out);
    }
    if (*adp_cmd) {
      return cmd_gadget_adp(g, graph_path, terminals, out_path, sidecar_path,
                            out);
    }
    if (*kroute_cmd) return cmd_approx(g, instance_path, k, out);
    if (*gen_cmd) return cmd_generate(g, profile, out);
  } catch (const Error& e) {
    report_failure(err, error_kind_name(e.kind()), e.what());
    return e.is_budget_gate() ? kExitBudget : kExitInput;
  }
  report_failure(err, "UsageError", "no command given");
  return kExitInput;
}

}  // namespace robustflow::cli
