#include "occred/reduction/existential.hpp"

#include <map>

#include "occred/errors.hpp"

namespace occred {

ExpansionReport certify_expander(const ExpanderGraph& g) {
  auto mode = g.vertex_count <= kExhaustiveExpansionLimit ? ExpansionMode::Exhaustive
                                                          : ExpansionMode::Spectral;
  return verify_edge_expansion(g, mode);
}

namespace {

ExistentialGadget expander_gadget(const ExpanderGraph& g, std::uint32_t first_id,
                                  std::optional<VariableId> owner) {
  ExistentialGadget gadget;
  gadget.style = Step2Style::Expander;
  for (std::uint32_t i = 0; i < g.vertex_count; ++i) gadget.copies.emplace_back(first_id + i);
  const ClauseTag tag{ClauseKind::Consistency, std::nullopt, owner};
  for (auto [a, b] : g.edges) {
    if (a == b) continue;
    auto ya = gadget.copies[a];
    auto yb = gadget.copies[b];
    gadget.clauses.emplace_back(std::vector{Literal(ya, true), Literal(yb, false)}, tag);
    gadget.clauses.emplace_back(std::vector{Literal(ya, false), Literal(yb, true)}, tag);
  }
  gadget.graph = g;
  return gadget;
}

ExistentialGadget cycle_gadget(std::uint32_t ell, std::uint32_t first_id,
                               std::optional<VariableId> owner) {
  ExistentialGadget gadget;
  gadget.style = Step2Style::Cycle;
  for (std::uint32_t i = 0; i < ell; ++i) gadget.copies.emplace_back(first_id + i);
  const ClauseTag tag{ClauseKind::Consistency, std::nullopt, owner};
  for (std::uint32_t j = 0; j < ell; ++j)
    gadget.clauses.emplace_back(
        std::vector{Literal(gadget.copies[j], true), Literal(gadget.copies[(j + 1) % ell], false)},
        tag);
  return gadget;
}

}  // namespace

ExistentialGadget build_existential_gadget(std::uint32_t ell, Step2Style style,
                                           std::uint32_t first_id,
                                           std::optional<VariableId> owner) {
  if (ell < 1) throw std::invalid_argument("existential gadget needs at least one occurrence");
  if (style == Step2Style::Cycle) return cycle_gadget(ell, first_id, owner);
  return expander_gadget(build_expander(ell), first_id, owner);
}

StepResult step2_reduce(const PrenexFormula& f, const PipelineOptions& opts) {
  validate(f);
  BindingTable table(f);
  std::map<VariableId, std::uint32_t> occurrences;
  for (const auto& c : f.clauses)
    for (auto lit : c.literals) ++occurrences[lit.variable()];

  StepResult result;
  auto& trace = result.trace;
  trace.step = 2;

  std::uint32_t next = first_free_id(f);
  std::map<std::uint32_t, std::pair<ExpanderGraph, ExpansionReport>> expanders;
  std::map<VariableId, ExistentialGadget> gadgets;
  for (const auto& [v, count] : occurrences) {
    if (f.blocks[table.block[v.value]].kind != Quantifier::Existential) continue;
    if (count <= opts.existential_threshold) continue;
    ExistentialGadgetInstance instance;
    instance.owner = v;
    instance.occurrences = count;
    instance.style = opts.step2_style;
    ExistentialGadget gadget;
    if (opts.step2_style == Step2Style::Expander) {
      auto it = expanders.find(count);
      if (it == expanders.end()) {
        auto g = build_expander(count, false);
        auto report = certify_expander(g);
        if (!report.holds)
          throw CertificationError("expander on " + std::to_string(g.vertex_count) +
                                   " vertices failed its expansion check");
        it = expanders.emplace(count, std::make_pair(std::move(g), std::move(report))).first;
      }
      gadget = expander_gadget(it->second.first, next, v);
      instance.expander_vertices = it->second.first.vertex_count;
      instance.certificate = it->second.second;
    } else {
      gadget = cycle_gadget(count, next, v);
    }
    next += static_cast<std::uint32_t>(gadget.copies.size());
    instance.copies = gadget.copies;
    trace.existential_gadgets.push_back(std::move(instance));
    gadgets.emplace(v, std::move(gadget));
  }

  PrenexFormula& out = result.formula;
  for (const auto& block : f.blocks) {
    QuantifierBlock copy{block.kind, {}};
    for (auto v : block.variables) {
      auto it = gadgets.find(v);
      if (it == gadgets.end()) {
        copy.variables.push_back(v);
        trace.variables.push_back({VariableRole::Kept, v, std::nullopt, {v}});
      } else {
        const auto& copies = it->second.copies;
        copy.variables.insert(copy.variables.end(), copies.begin(), copies.end());
        trace.variables.push_back({VariableRole::Copy, v, std::nullopt, copies});
      }
    }
    out.blocks.push_back(std::move(copy));
  }

  std::map<VariableId, std::uint32_t> seen;
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    std::vector<Literal> lits;
    for (auto lit : clause.literals) {
      auto it = gadgets.find(lit.variable());
      if (it == gadgets.end()) {
        lits.push_back(lit);
        continue;
      }
      auto j = seen[lit.variable()]++;
      lits.emplace_back(it->second.copies[j], lit.negated());
    }
    auto tag = clause.provenance.value_or(ClauseTag{ClauseKind::Original, c, std::nullopt});
    out.clauses.emplace_back(std::move(lits), tag);
  }
  for (auto& [v, g] : gadgets)
    for (auto& c : g.clauses) out.clauses.push_back(std::move(c));

  out.variable_count = std::max(f.variable_count, next - 1);
  trace.constants = measure_constants(f, out, 0);
  return result;
}

}  // namespace occred
