#include "occred/reduction/exact3.hpp"

#include <algorithm>

namespace occred {

StepResult step3_exact3(const PrenexFormula& f) {
  validate(f);
  StepResult result;
  auto& trace = result.trace;
  trace.step = 3;
  PrenexFormula& out = result.formula;

  std::uint32_t next = first_free_id(f);
  std::vector<VariableId> pads;
  std::vector<VariableId> chains;

  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    const auto& lits = clause.literals;
    const auto tag = clause.provenance.value_or(ClauseTag{ClauseKind::Original, c, std::nullopt});
    const ClauseTag pad_tag{ClauseKind::Pad, c, tag.gadget_owner};
    const ClauseTag split_tag{ClauseKind::Split, c, tag.gadget_owner};

    if (lits.size() == 3) {
      out.clauses.emplace_back(lits, tag);
    } else if (lits.size() < 3) {
      VariableId z(next++);
      pads.push_back(z);
      trace.variables.push_back({VariableRole::Pad, std::nullopt, c, {z}});
      Literal zl(z, false);
      if (lits.size() == 1)
        out.clauses.emplace_back(std::vector{lits[0], zl, zl}, pad_tag);
      else
        out.clauses.emplace_back(std::vector{lits[0], lits[1], zl}, pad_tag);
    } else {
      const std::size_t r = lits.size();
      std::vector<VariableId> z;
      for (std::size_t i = 0; i + 3 < r; ++i) z.emplace_back(next++);
      chains.insert(chains.end(), z.begin(), z.end());
      trace.variables.push_back({VariableRole::Chain, std::nullopt, c, z});
      out.clauses.emplace_back(std::vector{lits[0], lits[1], Literal(z[0], false)}, split_tag);
      for (std::size_t i = 1; i + 3 < r; ++i)
        out.clauses.emplace_back(
            std::vector{Literal(z[i - 1], true), lits[i + 1], Literal(z[i], false)}, split_tag);
      out.clauses.emplace_back(std::vector{Literal(z.back(), true), lits[r - 2], lits[r - 1]},
                               split_tag);
    }
  }

  out.blocks = f.blocks;
  for (const auto& b : f.blocks)
    for (auto v : b.variables) trace.variables.push_back({VariableRole::Kept, v, std::nullopt, {v}});

  if (!pads.empty()) {
    auto it = std::find_if(out.blocks.rbegin(), out.blocks.rend(),
                           [](const auto& b) { return b.kind == Quantifier::Universal; });
    if (it != out.blocks.rend()) {
      it->variables.insert(it->variables.end(), pads.begin(), pads.end());
    } else {
      out.blocks.insert(out.blocks.begin(), {Quantifier::Universal, pads});
    }
  }
  if (!chains.empty()) {
    if (!out.blocks.empty() && out.blocks.back().kind == Quantifier::Existential) {
      auto& dst = out.blocks.back().variables;
      dst.insert(dst.end(), chains.begin(), chains.end());
    } else {
      out.blocks.push_back({Quantifier::Existential, chains});
    }
  }

  out.variable_count = std::max(f.variable_count, next - 1);
  trace.constants = measure_constants(f, out, 0);
  return result;
}

}  // namespace occred
