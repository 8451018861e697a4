#include "robustflow/report_json.hpp"

#include "robustflow/error.hpp"

namespace robustflow::json {

namespace {

json arcs_to_json(const std::vector<ArcId>& arcs) {
  json out = json::array();
  for (ArcId e : arcs) out.push_back(e);
  return out;
}

std::vector<ArcId> arcs_from_json(const json& j) {
  std::vector<ArcId> arcs;
  for (const auto& e : j) arcs.push_back(e.get<int>());
  return arcs;
}

Rational rational_from_json(const json& j) {
  return parse_rational(j.get<std::string>());
}

}  // namespace

json path_flow_to_json(const PathFlow& flow) {
  json out = json::array();
  for (const auto& [path, value] : flow.entries()) {
    out.push_back({{"path", arcs_to_json(path.arcs)},
                   {"value", to_string(value)}});
  }
  return out;
}

PathFlow path_flow_from_json(const json& j) {
  PathFlow flow;
  for (const auto& entry : j) {
    flow.add(Path{arcs_from_json(entry.at("path"))},
             rational_from_json(entry.at("value")));
  }
  return flow;
}

json report_to_json(const SolveReport& report) {
  json out;
  out["objective"] = to_string(report.primal.objective);
  out["lambda"] = to_string(report.primal.lambda);
  out["flow"] = path_flow_to_json(report.primal.x);
  out["worst_scenario"] = arcs_to_json(report.worst_scenario.arcs);
  out["iterations"] = report.iterations;
  out["scenarios_generated"] = report.scenarios_generated;
  json masters = json::array();
  for (const Rational& r : report.master_objectives) {
    masters.push_back(to_string(r));
  }
  out["master_objectives"] = masters;
  if (report.dual) {
    json y = json::object();
    for (std::size_t e = 0; e < report.dual->y.size(); ++e) {
      y[std::to_string(e)] = to_string(report.dual->y[e]);
    }
    json z = json::array();
    for (const auto& [scenario, value] : report.dual->z) {
      z.push_back({{"scenario", arcs_to_json(scenario.arcs)},
                   {"value", to_string(value)}});
    }
    out["dual"] = {{"y", y}, {"z", z}};
  } else {
    out["dual"] = nullptr;
  }
  return out;
}

SolveReport report_from_json(const json& j) {
  try {
    SolveReport report;
    report.primal.objective = rational_from_json(j.at("objective"));
    report.primal.lambda = rational_from_json(j.at("lambda"));
    report.primal.x = path_flow_from_json(j.at("flow"));
    report.worst_scenario.arcs = arcs_from_json(j.at("worst_scenario"));
    report.iterations = j.at("iterations").get<int>();
    report.scenarios_generated = j.at("scenarios_generated").get<int>();
    for (const auto& r : j.at("master_objectives")) {
      report.master_objectives.push_back(rational_from_json(r));
    }
    const json& dual = j.at("dual");
    if (!dual.is_null()) {
      DualSolution d;
      const json& y = dual.at("y");
      d.y.assign(y.size(), Rational(0));
      for (const auto& [key, value] : y.items()) {
        const auto index = static_cast<std::size_t>(std::stoul(key));
        if (index >= d.y.size()) {
          throw Error(ErrorKind::kParse, "dual y index out of range");
        }
        d.y[index] = rational_from_json(value);
      }
      for (const auto& entry : dual.at("z")) {
        d.z.emplace(Scenario{arcs_from_json(entry.at("scenario"))},
                    rational_from_json(entry.at("value")));
      }
      report.dual = std::move(d);
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("bad report JSON: ") + e.what());
  }
}

json arc_map_to_json(const ArcMap& map) {
  json out = json::object();
  for (const auto& [original, split] : map.forward) {
    out[std::to_string(original)] = {{"gateway", split.gateway},
                                      {"units", arcs_to_json(split.units)}};
  }
  return out;
}

json clique_roles_to_json(const CliqueGadget& g) {
  const CliqueRoles& r = g.roles;
  const CliqueParams& p = g.params;
  json params = {{"kprime", p.kprime},
                 {"ell", p.ell},
                 {"k", p.k},
                 {"eps", to_string(p.eps)},
                 {"M", to_string(p.big_m)},
                 {"h", p.h}};
  json vertices = json::array();
  for (std::size_t v = 0; v < r.a.size(); ++v) {
    json arcs_hub = arcs_to_json(r.hub_arcs[v]);
    json arcs_unit = arcs_to_json(r.unit_arcs[v]);
    vertices.push_back({{"a", r.a[v]},
                        {"A", r.a_group[v]},
                        {"B", r.b_group[v]},
                        {"hub_arcs", arcs_hub},
                        {"unit_arcs", arcs_unit}});
  }
  json edges = json::array();
  for (std::size_t e = 0; e < r.a_edge1.size(); ++e) {
    edges.push_back({{"endpoints", {g.graph.edges[e].first,
                                    g.graph.edges[e].second}},
                     {"a_prime", r.a_edge1[e]},
                     {"a_second", r.a_edge2[e]},
                     {"arcs", arcs_to_json(r.edge_arcs[e])}});
  }
  json source_arcs = json::object();
  for (const auto& [node, arc] : r.source_arc) {
    source_arcs[std::to_string(node)] = arc;
  }
  json sink_arcs = json::object();
  for (const auto& [node, arc] : r.sink_arc) {
    sink_arcs[std::to_string(node)] = arc;
  }
  return {{"reduction", "clique"},
          {"params", params},
          {"nodes", {{"s", r.s}, {"t", r.t}, {"v_prime", r.v_prime},
                     {"v_second", r.v_second}}},
          {"vertices", vertices},
          {"edges", edges},
          {"source_arcs", source_arcs},
          {"sink_arcs", sink_arcs},
          {"parallel_arcs", arcs_to_json(r.parallel)},
          {"h_arcs", {{"e1_prime", r.e1_prime},
                      {"e2_prime", r.e2_prime},
                      {"e1_second", r.e1_second},
                      {"e2_second", r.e2_second},
                      {"s_v_second", r.s_to_v_second},
                      {"v_prime_t", r.v_prime_to_t},
                      {"v_prime_v_second", r.v_prime_to_v_second}}},
          {"F", arcs_to_json(r.f_arcs)}};
}

json adp_roles_to_json(const AdpGadget& g) {
  const AdpRoles& r = g.roles;
  return {{"reduction", "arc-disjoint-paths"},
          {"nodes", {{"s", r.s}, {"t", r.t}, {"v", r.v},
                     {"v_prime", r.v_prime}, {"v_second", r.v_second},
                     {"w", r.w}, {"s1", r.s1}, {"t1", r.t1}, {"s2", r.s2},
                     {"t2", r.t2}}},
          {"arcs", {{"s_v", r.s_v}, {"s_v_prime", r.s_v_prime},
                    {"s_v_second", r.s_v_second}, {"v_s1", r.v_s1},
                    {"v_v_prime", r.v_v_prime}, {"v_v_second", r.v_v_second},
                    {"v_prime_t", r.v_prime_t}, {"v_second_t", r.v_second_t},
                    {"s_w", r.s_w}, {"t1_w", r.t1_w}, {"w_t", r.w_t},
                    {"s_s2", r.s_s2}, {"t2_t", r.t2_t}}},
          {"graph_arcs", static_cast<int>(g.graph.edges.size())}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace robustflow::json
