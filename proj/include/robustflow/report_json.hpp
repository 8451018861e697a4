#pragma once

#include <string>

#include "json.hpp"
#include "robustflow/gadgets.hpp"
#include "robustflow/lp.hpp"
#include "robustflow/transforms.hpp"

namespace robustflow::json {

using nlohmann::json;

json path_flow_to_json(const PathFlow& flow);
PathFlow path_flow_from_json(const json& j);

// Rationals appear as "p/q" strings; no floating point is ever written.
json report_to_json(const SolveReport& report);
SolveReport report_from_json(const json& j);

json arc_map_to_json(const ArcMap& map);
json clique_roles_to_json(const CliqueGadget& g);
json adp_roles_to_json(const AdpGadget& g);

// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

}  // namespace robustflow::json
