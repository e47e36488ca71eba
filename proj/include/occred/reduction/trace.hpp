#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "occred/formula.hpp"
#include "occred/graphs/expander.hpp"
#include "occred/graphs/gadget.hpp"

namespace occred {

enum class Step2Style { Expander, Cycle };

std::string_view to_string(Step2Style style);
std::optional<Step2Style> step2_style_from_string(std::string_view name);

struct PipelineOptions {
  std::vector<int> steps{1, 2, 3};
  Step2Style step2_style = Step2Style::Expander;
  GadgetBackend gadget_backend = GadgetBackend::Benes;
  // Universal variables with at most this many occurrences skip step 1.
  std::uint32_t bypass_threshold = 2;
  // Existential variables with at most this many occurrences skip step 2.
  std::uint32_t existential_threshold = 3;
};

enum class VariableRole {
  Kept,
  GadgetInput,
  GadgetOutput,
  GadgetInternal,
  GadgetEdge,
  Copy,
  Pad,
  Chain,
};

std::string_view to_string(VariableRole role);

// New variables produced for one source variable or clause of a step's input.
struct VariableGroup {
  VariableRole role = VariableRole::Kept;
  std::optional<VariableId> source_variable;
  std::optional<std::size_t> source_clause;
  std::vector<VariableId> variables;
};

// One step-1 gadget. vertex_vars[v] is the variable of gadget vertex v
// (universal for inputs, existential otherwise); edge_vars[e] of edge e.
struct UniversalGadgetInstance {
  VariableId owner;
  std::uint32_t ell = 0;
  std::uint32_t duplication = 0;
  std::vector<VariableId> vertex_vars;
  std::vector<VariableId> edge_vars;
  GadgetGraph graph;
};

struct ExistentialGadgetInstance {
  VariableId owner;
  std::uint32_t occurrences = 0;
  Step2Style style = Step2Style::Expander;
  std::vector<VariableId> copies;
  // Expander style only.
  std::uint32_t expander_vertices = 0;
  std::optional<ExpansionReport> certificate;
};

struct ConstantsReport {
  std::size_t max_clause_size = 0;  // D
  std::size_t max_universal = 0;    // B for universal variables
  std::size_t max_existential = 0;  // B for existential variables
  double size_ratio = 0.0;          // output clauses / input clauses
  std::uint32_t duplication = 0;    // R, 0 when no universal gadget was built
};

struct StepTrace {
  int step = 0;
  std::vector<VariableGroup> variables;
  std::vector<UniversalGadgetInstance> universal_gadgets;
  std::vector<ExistentialGadgetInstance> existential_gadgets;
  ConstantsReport constants;
};

struct ReductionTrace {
  std::vector<StepTrace> steps;
};

ConstantsReport measure_constants(const PrenexFormula& input, const PrenexFormula& output,
                                  std::uint32_t duplication);

nlohmann::json to_json(const OccurrenceProfile& p);
nlohmann::json to_json(const ConstantsReport& c);
nlohmann::json to_json(const StepTrace& t);
nlohmann::json to_json(const ReductionTrace& t);

}  // namespace occred
