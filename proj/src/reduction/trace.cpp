#include "occred/reduction/trace.hpp"

#include <algorithm>
#include <array>

#include "occred/graphs/export.hpp"

namespace occred {

std::string_view to_string(Step2Style style) {
  return style == Step2Style::Expander ? "expander" : "cycle";
}

std::optional<Step2Style> step2_style_from_string(std::string_view name) {
  if (name == "expander") return Step2Style::Expander;
  if (name == "cycle") return Step2Style::Cycle;
  return std::nullopt;
}

std::string_view to_string(VariableRole role) {
  constexpr std::array<std::string_view, 8> names{
      "kept", "gadget_input", "gadget_output", "gadget_internal",
      "gadget_edge", "copy", "pad", "chain"};
  return names[static_cast<std::size_t>(role)];
}

ConstantsReport measure_constants(const PrenexFormula& input, const PrenexFormula& output,
                                  std::uint32_t duplication) {
  auto profile = occurrence_profile(output);
  ConstantsReport c;
  c.max_clause_size = profile.max_clause_size;
  c.max_universal = profile.max_universal;
  c.max_existential = profile.max_existential;
  c.size_ratio = static_cast<double>(output.clauses.size()) /
                 static_cast<double>(std::max<std::size_t>(1, input.clauses.size()));
  c.duplication = duplication;
  return c;
}

nlohmann::json to_json(const OccurrenceProfile& p) {
  nlohmann::json j;
  auto& per = j["per_variable"] = nlohmann::json::object();
  for (const auto& [v, count] : p.per_variable) per[std::to_string(v.value)] = count;
  j["max_universal"] = p.max_universal;
  j["max_existential"] = p.max_existential;
  j["max_clause_size"] = p.max_clause_size;
  return j;
}

nlohmann::json to_json(const ConstantsReport& c) {
  return {{"D", c.max_clause_size},
          {"B_universal", c.max_universal},
          {"B_existential", c.max_existential},
          {"size_ratio", c.size_ratio},
          {"R", c.duplication}};
}

namespace {

std::vector<std::uint32_t> ids(const std::vector<VariableId>& vars) {
  std::vector<std::uint32_t> out;
  out.reserve(vars.size());
  for (auto v : vars) out.push_back(v.value);
  return out;
}

}  // namespace

nlohmann::json to_json(const StepTrace& t) {
  nlohmann::json j;
  j["step"] = t.step;
  auto& vars = j["variable_map"] = nlohmann::json::array();
  for (const auto& g : t.variables) {
    nlohmann::json e;
    e["role"] = std::string(to_string(g.role));
    if (g.source_variable) e["source_variable"] = g.source_variable->value;
    if (g.source_clause) e["source_clause"] = *g.source_clause;
    e["variables"] = ids(g.variables);
    vars.push_back(std::move(e));
  }
  auto& ug = j["universal_gadgets"] = nlohmann::json::array();
  for (const auto& g : t.universal_gadgets) {
    ug.push_back({{"owner", g.owner.value},
                  {"ell", g.ell},
                  {"backend", std::string(to_string(g.graph.backend))},
                  {"vertex_count", g.graph.vertex_count},
                  {"edge_count", g.graph.edges.size()},
                  {"degree_bound", g.graph.degree_bound},
                  {"duplication", g.duplication},
                  {"vertex_vars", ids(g.vertex_vars)},
                  {"edge_vars", ids(g.edge_vars)},
                  {"certificate", g.graph.certificate ? to_json(*g.graph.certificate)
                                                      : nlohmann::json()}});
  }
  auto& eg = j["existential_gadgets"] = nlohmann::json::array();
  for (const auto& g : t.existential_gadgets) {
    nlohmann::json e{{"owner", g.owner.value},
                     {"occurrences", g.occurrences},
                     {"style", std::string(to_string(g.style))},
                     {"copies", ids(g.copies)}};
    if (g.style == Step2Style::Expander) {
      e["expander_vertices"] = g.expander_vertices;
      e["certificate"] = g.certificate ? to_json(*g.certificate) : nlohmann::json();
    }
    eg.push_back(std::move(e));
  }
  j["constants"] = to_json(t.constants);
  return j;
}

nlohmann::json to_json(const ReductionTrace& t) {
  auto arr = nlohmann::json::array();
  for (const auto& s : t.steps) arr.push_back(to_json(s));
  return arr;
}

}  // namespace occred
