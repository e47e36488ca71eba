#pragma once

#include <vector>

#include <json.hpp>

#include "occred/formula.hpp"
#include "occred/reduction/trace.hpp"

namespace occred {

struct PipelineReport {
  OccurrenceProfile before;
  OccurrenceProfile after;
  ConstantsReport constants;
  // Routing certificates of certified gadget graphs (recursive backend).
  std::vector<RoutingReport> gadget_certificates;
  std::vector<ExpansionReport> expander_certificates;
};

struct PipelineResult {
  PrenexFormula formula;
  ReductionTrace trace;
  PipelineReport report;
};

// Throws std::invalid_argument unless opts.steps is strictly ascending
// within {1, 2, 3}.
void check_steps(const std::vector<int>& steps);

PipelineResult run_pipeline(const PrenexFormula& f, const PipelineOptions& opts = {});

nlohmann::json to_json(const PipelineReport& r);
// Trace sidecar: per-step variable map and gadget certificates, clause tags
// of the final formula, report.
nlohmann::json trace_json(const PipelineResult& r, const PipelineOptions& opts);

}  // namespace occred
