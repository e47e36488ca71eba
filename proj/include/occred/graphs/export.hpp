#pragma once

#include <string>

#include <json.hpp>

#include "occred/graphs/expander.hpp"
#include "occred/graphs/gadget.hpp"

namespace occred {

// DOT digraph; inputs as boxes, outputs as double circles, internal as points.
std::string export_dot(const GadgetGraph& g);
// Undirected DOT graph, one line per parallel edge.
std::string export_dot(const ExpanderGraph& g);

nlohmann::json to_json(const RoutingReport& r);
nlohmann::json to_json(const GadgetGraph& g);
nlohmann::json to_json(const ExpanderGraph& g);
nlohmann::json to_json(const ExpansionReport& r);

}  // namespace occred
