#pragma once

#include <cstdint>
#include <vector>

#include "occred/formula.hpp"
#include "occred/graphs/gadget.hpp"
#include "occred/reduction/trace.hpp"

namespace occred {

// Clause families (2)-(5) over a gadget graph of size ell. Variables are
// numbered from `first_id` in the order U (2*ell), V (ell), W, then edges.
struct UniversalGadget {
  GadgetGraph graph;
  std::vector<VariableId> inputs;    // universal, one per U vertex
  std::vector<VariableId> outputs;   // existential, one per V vertex
  std::vector<VariableId> internal;  // existential, one per W vertex
  std::vector<VariableId> edges;     // existential, one per edge
  std::vector<Clause> clauses;
  std::uint32_t duplication = 0;  // R = d^2
  // Number of existential gadget variables.
  std::uint32_t k() const {
    return static_cast<std::uint32_t>(outputs.size() + internal.size() + edges.size());
  }
  VariableId vertex_var(std::uint32_t v) const;
};

UniversalGadget build_universal_gadget(std::uint32_t ell, GadgetBackend backend,
                                       std::uint32_t first_id,
                                       std::optional<VariableId> owner = std::nullopt);
// Same, over an already built graph.
UniversalGadget build_universal_gadget(const GadgetGraph& graph, std::uint32_t first_id,
                                       std::optional<VariableId> owner = std::nullopt);

struct StepResult {
  PrenexFormula formula;
  StepTrace trace;
};

// Replaces every universal variable with more than opts.bypass_threshold
// occurrences by a gadget: its j-th occurrence becomes the j-th output
// variable, the inputs take its place in the prefix, and the gadget's
// existential variables go into the next existential block.
StepResult step1_reduce(const PrenexFormula& f, const PipelineOptions& opts = {});

}  // namespace occred
