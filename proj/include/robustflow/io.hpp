#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "robustflow/gadgets.hpp"
#include "robustflow/graph.hpp"
#include "robustflow/robust_eval.hpp"

namespace robustflow::io {

// Instance records, one per line, '#' starts a comment:
//   p rflow <node_count> <arc_count> <k>
//   s <node>
//   t <node>
//   a <tail> <head> <capacity>      capacity: INF | <int> | <num>/<den>
// Arc ids follow file order from 0. Unknown records are errors.
Instance parse_instance(std::string_view text);
std::string format_instance(const Instance& inst);

// One path per line: "f <arc_id> ... : <rational>".
PathFlow parse_path_flow(std::string_view text);
std::string format_path_flow(const PathFlow& flow);

// "S <arc_id> ..." (an empty list is the k = 0 scenario).
std::vector<ArcId> parse_scenario(std::string_view text);
std::string format_scenario(const std::vector<ArcId>& arcs);

// "p graph <n> <m>" followed by m lines "e <u> <v>", nodes from 0.
SimpleGraph parse_graph(std::string_view text);
std::string format_graph(const SimpleGraph& graph);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace robustflow::io
