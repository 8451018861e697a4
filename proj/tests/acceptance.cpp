// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fixtures.hpp"
#include "gadget_audit.hpp"
#include "robustflow/cli.hpp"
#include "robustflow/error.hpp"
#include "robustflow/gadgets.hpp"
#include "robustflow/io.hpp"
#include "robustflow/kroute.hpp"
#include "robustflow/lp.hpp"
#include "robustflow/random_instance.hpp"
#include "robustflow/special_solvers.hpp"
#include "robustflow/transforms.hpp"

using namespace robustflow;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kBudget = 100000000;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& name,
            const std::function<Outcome()>& body) {
  Outcome o;
  auto t0 = Clock::now();
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", seconds_since(t0));
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": "
            << name << " [" << timing << "] " << o.detail << std::endl;
  if (!o.pass) ++failures;
}

std::vector<Instance> criterion1_instances() {
  std::mt19937_64 rng(20240101);
  RandomInstanceOptions opts;  // |V| <= 8, |E| <= 14, k <= 2, caps {1,2,3}
  std::vector<Instance> out;
  for (int i = 0; i < 100; ++i) out.push_back(random_instance(rng, opts));
  return out;
}

int cut_cardinality(const Instance& inst) {
  return static_cast<int>(min_cut(inst, unit_override(inst)).arcs.size());
}

SimpleGraph digraph(int n, std::vector<std::pair<int, int>> arcs) {
  return SimpleGraph{n, std::move(arcs)};
}

struct AdpCase {
  SimpleGraph graph;
  int s1, t1, s2, t2;
};

std::vector<AdpCase> adp_cases() {
  std::vector<AdpCase> cases{
      // positive: two disjoint demand arcs
      {digraph(4, {{0, 1}, {2, 3}}), 0, 1, 2, 3},
      // positive: crossing demands that can detour
      {digraph(5, {{0, 4}, {4, 1}, {2, 4}, {4, 3}}), 0, 1, 2, 3},
      // positive: shared middle arc but a bypass exists
      {digraph(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {1, 5}}), 0, 4, 1,
       5},
      // negative: both demands through arc 2 -> 3
      {digraph(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}), 0, 4, 1, 5},
      // negative: second demand unreachable
      {digraph(4, {{0, 1}}), 0, 1, 2, 3},
      // negative: no arcs at all
      {digraph(4, {}), 0, 1, 2, 3},
      // negative: single shared path for identical pairs
      {digraph(3, {{0, 1}, {1, 2}}), 0, 2, 0, 2},
      // positive: identical pairs with two parallel routes
      {digraph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}), 0, 3, 0, 3},
  };
  std::mt19937_64 rng(777);
  while (cases.size() < 24) {
    std::uniform_int_distribution<int> nodes(4, 6);
    const int n = nodes(rng);
    std::uniform_int_distribution<int> arcs(2, 8), pick(0, n - 1);
    int s1 = pick(rng), t1 = pick(rng), s2 = pick(rng), t2 = pick(rng);
    if (s1 == t1 || s2 == t2) continue;
    // Plant one route per demand through random intermediate nodes, then
    // pad with uniform arcs; shared nodes produce both outcomes.
    SimpleGraph g{n, {}};
    std::uniform_int_distribution<int> hops(0, 2);
    for (auto [a, b] : {std::pair{s1, t1}, std::pair{s2, t2}}) {
      int at = a;
      for (int h = hops(rng); h > 0; --h) {
        int next = pick(rng);
        if (next == at || next == b) continue;
        g.edges.emplace_back(at, next);
        at = next;
      }
      g.edges.emplace_back(at, b);
    }
    const int extra = std::max(0, arcs(rng) - static_cast<int>(g.edges.size()));
    for (auto e : random_digraph(rng, n, extra).edges) g.edges.push_back(e);
    if (g.edges.size() > 8) continue;
    cases.push_back({g, s1, t1, s2, t2});
  }
  return cases;
}

// Vertex set of size k' inducing h* edges: the lexicographically first one.
std::vector<int> densest_set(const SimpleGraph& g, int kprime, int hstar) {
  for (unsigned mask = 0; mask < (1u << g.node_count); ++mask) {
    std::vector<int> u;
    for (int v = 0; v < g.node_count; ++v)
      if (mask >> v & 1u) u.push_back(v);
    if (static_cast<int>(u.size()) == kprime &&
        induced_edge_count(g, u) == hstar) {
      return u;
    }
  }
  return {};
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

}  // namespace

int main() {
  const std::vector<Instance> c1 = criterion1_instances();

  report(1, "row generation equals full LP on random instances", [&] {
    Outcome o;
    auto t0 = Clock::now();
    int positive = 0;
    for (std::size_t i = 0; i < c1.size(); ++i) {
      Rational full = solve_full_lp(c1[i]).primal.objective;
      if (full > 0) ++positive;
      Rational rg = solve_row_generation(c1[i]).primal.objective;
      if (full != rg) {
        o.fail("instance " + std::to_string(i) + ": " + to_string(full) +
               " vs " + to_string(rg));
      }
    }
    double secs = seconds_since(t0);
    if (secs >= 120) o.fail("runtime " + std::to_string(secs) + "s");
    if (o.pass) {
      o.detail = std::to_string(c1.size()) + " instances, " +
                 std::to_string(positive) + " with positive optimum";
    }
    return o;
  });

  report(2, "instances with a cut of at most k arcs have LP value 0", [&] {
    Outcome o;
    std::vector<Instance> pool = c1;
    // Extra draws with k <= 2 over sparse graphs so the case is well covered.
    std::mt19937_64 rng(4242);
    RandomInstanceOptions sparse;
    sparse.max_arcs = 6;
    sparse.min_k = 1;
    for (int i = 0; i < 40; ++i) pool.push_back(random_instance(rng, sparse));
    int hits = 0;
    for (const Instance& inst : pool) {
      if (cut_cardinality(inst) > inst.k()) continue;
      ++hits;
      if (solve_full_lp(inst).primal.objective != 0 ||
          solve_row_generation(inst).primal.objective != 0) {
        o.fail("nonzero objective on a k-cut instance");
      }
    }
    if (hits == 0) o.fail("no instance with a small cut was generated");
    if (o.pass) o.detail = std::to_string(hits) + " qualifying instances";
    return o;
  });

  report(3, "unit capacities: max flow is a maximum robust flow", [&] {
    Outcome o;
    std::mt19937_64 rng(303);
    RandomInstanceOptions opts;
    opts.capacities = {1};
    const int n = 100;
    for (int i = 0; i < n; ++i) {
      Instance inst = random_instance(rng, opts);
      Rational expect = std::max(0, cut_cardinality(inst) - inst.k());
      Rational unit = solve_unit_capacity(inst).value;
      Rational lp = solve_full_lp(inst).primal.objective;
      if (unit != expect || lp != expect) {
        o.fail("instance " + std::to_string(i) + ": unit " + to_string(unit) +
               ", lp " + to_string(lp) + ", |C|-k " + to_string(expect));
      }
    }
    if (o.pass) o.detail = std::to_string(n) + " instances";
    return o;
  });

  report(4, "capacities in {1,2}: closed form equals brute force", [&] {
    Outcome o;
    std::mt19937_64 rng(404);
    RandomInstanceOptions opts;
    opts.capacities = {1, 2};
    opts.max_arcs = 10;
    opts.max_k = 3;
    const int n = 100;
    int greedy_steps = 0, positive = 0;
    for (int i = 0; i < n; ++i) {
      Instance inst = random_instance(rng, opts);
      IntegralSolution c2 = solve_integral_cap2(inst);
      IntegralSolution bf = brute_force_integral(inst, kBudget);
      if (bf.value > 0) ++positive;
      if (c2.value != bf.value) {
        o.fail("instance " + std::to_string(i) + ": " + to_string(c2.value) +
               " vs brute force " + to_string(bf.value));
      }
      GreedyInterdiction g = greedy_cut_interdiction(inst, c2.flow);
      for (std::size_t s = 0; s < g.trace.size(); ++s) {
        const Rational& d = g.trace[s].delta;
        ++greedy_steps;
        if (d != 0 && d != 1 && d != 2) o.fail("delta outside {0,1,2}");
        if (s > 0 && d > g.trace[s - 1].delta) o.fail("delta increased");
      }
    }
    if (o.pass) {
      o.detail = std::to_string(n) + " instances, " +
                 std::to_string(positive) + " with positive optimum, " +
                 std::to_string(greedy_steps) + " greedy steps";
    }
    return o;
  });

  report(5, "capacity splitting preserves LP and robust values", [&] {
    Outcome o;
    std::mt19937_64 rng(505);
    RandomInstanceOptions opts;
    opts.max_nodes = 5;
    opts.max_arcs = 6;
    opts.max_k = 2;
    const int n = 60;
    int positive = 0;
    for (int i = 0; i < n; ++i) {
      Instance inst = random_instance(rng, opts);
      SplitResult split = split_capacities(inst);
      SolveReport a = solve_row_generation(inst);
      SolveReport b = solve_row_generation(split.instance);
      if (a.primal.objective > 0) ++positive;
      if (a.primal.objective != b.primal.objective) {
        o.fail("instance " + std::to_string(i) + ": LP " +
               to_string(a.primal.objective) + " vs split " +
               to_string(b.primal.objective));
      }
      PathFlow back =
          map_flow_back(inst, split.instance, split.arc_map, b.primal.x);
      Rational lhs = robust_value(inst, back, kBudget);
      Rational rhs = robust_value(split.instance, b.primal.x, kBudget);
      if (lhs != rhs) {
        o.fail("instance " + std::to_string(i) + ": robust " +
               to_string(lhs) + " vs " + to_string(rhs));
      }
    }
    if (o.pass) {
      o.detail = std::to_string(n) + " instances, " +
                 std::to_string(positive) + " with positive optimum";
    }
    return o;
  });

  report(6, "arc-disjoint paths reduction, both directions", [&] {
    Outcome o;
    int positive = 0, negative = 0;
    double slowest = 0;
    const auto cases = adp_cases();
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const AdpCase& c = cases[i];
      auto t0 = Clock::now();
      AdpGadget g = build_adp_gadget(c.graph, c.s1, c.t1, c.s2, c.t2);
      auto pair = disjoint_paths_oracle(c.graph, c.s1, c.t1, c.s2, c.t2);
      Rational best = brute_force_integral(g.instance, kBudget).value;
      const std::string tag = "case " + std::to_string(i);
      if ((best >= 3) != pair.has_value()) {
        o.fail(tag + ": brute force " + to_string(best) + ", oracle " +
               (pair ? "yes" : "no"));
      }
      if (pair) {
        ++positive;
        PathFlow x = adp_witness_flow(g, pair->first, pair->second);
        if (nominal_value(x) != 7) o.fail(tag + ": witness nominal != 7");
        if (robust_value(g.instance, x, kBudget) != 3) {
          o.fail(tag + ": witness robust value != 3");
        }
      } else {
        ++negative;
      }
      slowest = std::max(slowest, seconds_since(t0));
    }
    if (slowest >= 60) o.fail("a case took " + std::to_string(slowest) + "s");
    if (positive == 0 || negative == 0) o.fail("missing a direction");
    if (o.pass) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%d positive, %d negative, slowest %.2fs",
                    positive, negative, slowest);
      o.detail = buf;
    }
    return o;
  });

  report(7, "clique gadget structural audit", [&] {
    Outcome o;
    std::vector<std::pair<SimpleGraph, int>> inputs{
        {complete_graph(3), 3},
        {complete_graph(4), 3},
        {cycle_graph(5), 3},
        {SimpleGraph{2, {{0, 1}}}, 2}};
    for (const auto& [graph, kp] : inputs) {
      CliqueGadget g = build_clique_gadget(graph, kp);
      for (const std::string& msg : audit::clique_gadget(g)) o.fail(msg);
      if (!validate_instance(g.instance).ok()) o.fail("invalid instance");
    }
    if (o.pass) o.detail = "4 gadgets";
    return o;
  });

  report(8, "witness scenario accounting on K3 and C5", [&] {
    Outcome o;
    for (const SimpleGraph& graph : {complete_graph(3), cycle_graph(5)}) {
      const int kp = 3;
      CliqueGadget g = build_clique_gadget(graph, kp);
      const int hstar = h_star(graph, kp);
      const std::vector<int> u = densest_set(graph, kp, hstar);
      const long nv = graph.node_count;
      const long ne = static_cast<long>(graph.edges.size());
      for (HVariant v : {HVariant::kZeroRoute, HVariant::kEpsRoute}) {
        PathFlow x = canonical_gadget_flow(g, v);
        // F*: the 2h* arcs of F with the most flow, smallest id on ties.
        std::vector<ArcId> ranked = g.roles.f_arcs;
        std::stable_sort(ranked.begin(), ranked.end(), [&](ArcId a, ArcId b) {
          return arc_flow_value(x, a) > arc_flow_value(x, b);
        });
        std::vector<ArcId> f_star(ranked.begin(), ranked.begin() + 2 * hstar);
        Scenario s_star = structured_scenario(g, u, f_star);
        Rational formula =
            Rational((nv + 4 * ne) * g.params.ell) * g.params.big_m +
            Rational(kp * g.params.ell) + f_top(x, g.roles.f_arcs, 2L * hstar);
        if (destroyed_value(x, s_star) != formula) {
          o.fail("destroyed value at S* differs from the closed form");
        }
        StructuredLambda sl = structured_lambda(g, x);
        if (sl.lambda != formula) o.fail("structured lambda misses the form");
        if (destroyed_value(x, sl.scenario) != sl.lambda) {
          o.fail("structured witness inconsistent");
        }
      }
    }
    if (o.pass) o.detail = "2 graphs x 2 flow variants";
    return o;
  });

  report(9, "clique decision via the canonical flow variants", [&] {
    Outcome o;
    auto gap = [](const SimpleGraph& graph) {
      CliqueGadget g = build_clique_gadget(graph, 3);
      PathFlow e = canonical_gadget_flow(g, HVariant::kEpsRoute);
      PathFlow z = canonical_gadget_flow(g, HVariant::kZeroRoute);
      Rational oe = nominal_value(e) - structured_lambda(g, e).lambda;
      Rational oz = nominal_value(z) - structured_lambda(g, z).lambda;
      return std::pair<Rational, Rational>(oe - oz, g.params.eps);
    };
    std::string detail;
    for (const SimpleGraph& clique : {complete_graph(3), complete_graph(4)}) {
      auto [d, eps] = gap(clique);
      if (d != eps) o.fail("clique input gap " + to_string(d));
      detail += "K" + std::to_string(clique.node_count) + " gap " +
                to_string(d) + ", ";
    }
    auto [d5, eps5] = gap(cycle_graph(5));
    if (d5 > 0) o.fail("C5 eps-route beats zero-route");
    if (o.pass) o.detail = detail + "C5 gap " + to_string(d5);
    return o;
  });

  report(10, "(k+1)-route baseline guarantee and ratio", [&] {
    Outcome o;
    for (std::size_t i = 0; i < c1.size(); ++i) {
      const Instance& inst = c1[i];
      RobustBaseline b = robust_baseline(inst, inst.k());
      Rational rv = robust_value(inst, b.flow, kBudget);
      if (rv < b.value / (inst.k() + 1)) {
        o.fail("instance " + std::to_string(i) + ": guarantee violated");
      }
      Rational opt = solve_full_lp(inst).primal.objective;
      if (opt > (inst.k() + 1) * rv) {
        o.fail("instance " + std::to_string(i) + ": ratio exceeded");
      }
    }
    if (o.pass) o.detail = std::to_string(c1.size()) + " instances";
    return o;
  });

  report(11, "k=1 optimum can carry a maximum flow", [&] {
    Outcome o;
    std::mt19937_64 rng(1111);
    RandomInstanceOptions opts;
    opts.min_k = 1;
    opts.max_k = 1;
    const int n = 60;
    for (int i = 0; i < n; ++i) {
      Instance inst = random_instance(rng, opts);
      Rational opt = solve_full_lp(inst).primal.objective;
      LpOptions fixed;
      fixed.fixed_nominal = max_flow(inst).value;
      SolveReport r = solve_full_lp(inst, fixed);
      if (r.primal.objective != opt ||
          nominal_value(r.primal.x) != *fixed.fixed_nominal) {
        o.fail("instance " + std::to_string(i) + ": " + to_string(opt) +
               " drops to " + to_string(r.primal.objective));
      }
    }
    if (o.pass) o.detail = std::to_string(n) + " instances";
    return o;
  });

  report(12, "CLI JSON identical across runs and thread counts", [&] {
    Outcome o;
    fs::path dir = fs::temp_directory_path() /
                   ("rf_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto file = [&](const std::string& name, const std::string& text) {
      std::string p = (dir / name).string();
      io::write_file(p, text);
      return p;
    };
    std::mt19937_64 rng(1212);
    Instance inst = random_instance(rng, {});
    while (max_flow(inst).value == 0) inst = random_instance(rng, {});
    const std::string in = file("inst.rflow", io::format_instance(inst));
    const std::string fl = file(
        "flow.pathflow",
        io::format_path_flow(solve_row_generation(inst).primal.x));
    const std::string k3 = file("k3.txt", io::format_graph(complete_graph(3)));
    const std::string g4 = file("g4.txt", "p graph 4 2\ne 0 1\ne 2 3\n");
    std::vector<std::vector<std::string>> commands{
        {"validate", in},
        {"solve-lp", in},
        {"solve-lp", in, "--rowgen"},
        {"solve-int", in},
        {"eval", in, "--flow", fl},
        {"worst-case", in, "--flow", fl},
        {"transform", in, "--mode", "split"},
        {"transform", in, "--mode", "finitize"},
        {"transform", in, "--mode", "scale"},
        {"gadget", "clique", "--graph", k3, "--kprime", "3"},
        {"gadget", "adp", "--graph", g4, "--terminals", "0", "1", "2", "3"},
        {"approx", "kroute", in, "--k", "1"},
        {"generate", "--seed", "99"},
    };
    for (auto cmd : commands) {
      cmd.push_back("--json");
      std::vector<std::string> outputs;
      for (const char* threads : {"1", "4"}) {
        for (int rep = 0; rep < 2; ++rep) {
          auto args = cmd;
          args.insert(args.end(), {"--threads", threads});
          CliResult r = cli_run(args);
          if (r.code != 0) o.fail(cmd[0] + " exited " + std::to_string(r.code));
          outputs.push_back(r.out);
        }
      }
      for (const auto& out : outputs) {
        if (out != outputs.front()) o.fail(cmd[0] + " output differs");
      }
    }
    fs::remove_all(dir);
    if (o.pass) o.detail = std::to_string(commands.size()) + " commands x 4 runs";
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
