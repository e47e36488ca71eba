#include "occred/reduction/pipeline.hpp"

#include <stdexcept>
#include <string>

#include "occred/graphs/export.hpp"
#include "occred/reduction/exact3.hpp"
#include "occred/reduction/existential.hpp"
#include "occred/reduction/universal.hpp"

namespace occred {

void check_steps(const std::vector<int>& steps) {
  int last = 0;
  for (int s : steps) {
    if (s < 1 || s > 3) throw std::invalid_argument("unknown step " + std::to_string(s));
    if (s <= last) throw std::invalid_argument("steps must be listed once each in ascending order");
    last = s;
  }
}

PipelineResult run_pipeline(const PrenexFormula& f, const PipelineOptions& opts) {
  check_steps(opts.steps);
  validate(f);
  PipelineResult result;
  result.report.before = occurrence_profile(f);
  PrenexFormula current = f;
  std::uint32_t duplication = 0;
  for (int s : opts.steps) {
    StepResult step = s == 1   ? step1_reduce(current, opts)
                      : s == 2 ? step2_reduce(current, opts)
                               : step3_exact3(current);
    for (const auto& g : step.trace.universal_gadgets) {
      if (g.graph.certificate) result.report.gadget_certificates.push_back(*g.graph.certificate);
      duplication = std::max(duplication, g.duplication);
    }
    for (const auto& g : step.trace.existential_gadgets)
      if (g.certificate) result.report.expander_certificates.push_back(*g.certificate);
    current = std::move(step.formula);
    result.trace.steps.push_back(std::move(step.trace));
  }
  result.report.after = occurrence_profile(current);
  result.report.constants = measure_constants(f, current, duplication);
  result.formula = std::move(current);
  return result;
}

nlohmann::json to_json(const PipelineReport& r) {
  nlohmann::json j;
  j["before"] = to_json(r.before);
  j["after"] = to_json(r.after);
  j["constants"] = to_json(r.constants);
  auto& g = j["gadget_certificates"] = nlohmann::json::array();
  for (const auto& c : r.gadget_certificates) g.push_back(to_json(c));
  auto& e = j["expander_certificates"] = nlohmann::json::array();
  for (const auto& c : r.expander_certificates) e.push_back(to_json(c));
  return j;
}

nlohmann::json trace_json(const PipelineResult& r, const PipelineOptions& opts) {
  nlohmann::json j;
  j["options"] = {{"steps", opts.steps},
                  {"style", std::string(to_string(opts.step2_style))},
                  {"backend", std::string(to_string(opts.gadget_backend))},
                  {"bypass", opts.bypass_threshold}};
  j["steps"] = to_json(r.trace);
  auto& tags = j["clause_tags"] = nlohmann::json::array();
  for (const auto& c : r.formula.clauses) {
    nlohmann::json t;
    auto tag = c.provenance.value_or(ClauseTag{});
    t["kind"] = std::string(to_string(tag.kind));
    if (tag.origin) t["origin"] = *tag.origin;
    if (tag.gadget_owner) t["gadget_owner"] = tag.gadget_owner->value;
    tags.push_back(std::move(t));
  }
  j["report"] = to_json(r.report);
  return j;
}

}  // namespace occred
