#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "occred/formula.hpp"
#include "occred/graphs/expander.hpp"
#include "occred/reduction/trace.hpp"
#include "occred/reduction/universal.hpp"

namespace occred {

// Copies of one existential variable tied together by equality clauses.
// Expander: one copy per vertex of build_expander(ell), clauses
// (~a | b), (a | ~b) per non-loop edge. Cycle: ell copies, (~y_j | y_{j+1}).
struct ExistentialGadget {
  Step2Style style = Step2Style::Expander;
  std::vector<VariableId> copies;
  std::vector<Clause> clauses;
  std::optional<ExpanderGraph> graph;
};

ExistentialGadget build_existential_gadget(std::uint32_t ell, Step2Style style,
                                           std::uint32_t first_id,
                                           std::optional<VariableId> owner = std::nullopt);

// Certifies an expander for use in step 2: exhaustive up to
// kExhaustiveExpansionLimit vertices, spectral above.
ExpansionReport certify_expander(const ExpanderGraph& g);

// Gives every existential variable with more than opts.existential_threshold
// occurrences one copy per occurrence (same block, same position) plus
// consistency clauses. Throws CertificationError if an expander fails.
StepResult step2_reduce(const PrenexFormula& f, const PipelineOptions& opts = {});

}  // namespace occred
