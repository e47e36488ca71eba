#include "occred/formula.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "occred/errors.hpp"

namespace occred {

Literal Literal::from_dimacs(std::int64_t lit) {
  return Literal(VariableId(static_cast<std::uint32_t>(std::llabs(lit))), lit < 0);
}

std::string_view to_string(Quantifier q) {
  return q == Quantifier::Universal ? "universal" : "existential";
}

namespace {

constexpr std::array<std::pair<ClauseKind, std::string_view>, 9> kKindNames{{
    {ClauseKind::Original, "original"},
    {ClauseKind::Major, "major"},
    {ClauseKind::Outdegree, "outdegree"},
    {ClauseKind::Flow, "flow"},
    {ClauseKind::VDegree, "v_degree"},
    {ClauseKind::EdgeConsistency, "edge_consistency"},
    {ClauseKind::Consistency, "consistency"},
    {ClauseKind::Split, "split"},
    {ClauseKind::Pad, "pad"},
}};

}  // namespace

std::string_view to_string(ClauseKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<ClauseKind> clause_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  return std::nullopt;
}

std::size_t PrenexFormula::literal_count() const {
  std::size_t total = 0;
  for (const auto& c : clauses) total += c.size();
  return total;
}

std::uint32_t PrenexFormula::max_bound_variable() const {
  std::uint32_t best = 0;
  for (const auto& b : blocks)
    for (auto v : b.variables) best = std::max(best, v.value);
  return best;
}

bool same_structure(const PrenexFormula& a, const PrenexFormula& b) {
  if (a.variable_count != b.variable_count || a.blocks != b.blocks ||
      a.clauses.size() != b.clauses.size())
    return false;
  for (std::size_t i = 0; i < a.clauses.size(); ++i)
    if (a.clauses[i].literals != b.clauses[i].literals) return false;
  return true;
}

BindingTable::BindingTable(const PrenexFormula& f) {
  std::uint32_t top = std::max(f.variable_count, f.max_bound_variable());
  for (const auto& c : f.clauses)
    for (auto lit : c.literals) top = std::max(top, lit.variable().value);
  block.assign(static_cast<std::size_t>(top) + 1, -1);
  for (std::size_t b = 0; b < f.blocks.size(); ++b)
    for (auto v : f.blocks[b].variables) block[v.value] = static_cast<int>(b);
}

void validate(const PrenexFormula& f) {
  std::vector<bool> seen;
  for (const auto& b : f.blocks) {
    if (b.variables.empty()) throw BindingError("empty quantifier block");
    for (auto v : b.variables) {
      if (v.value == 0) throw BindingError("variable id 0 is not allowed");
      if (seen.size() <= v.value) seen.resize(v.value + 1, false);
      if (seen[v.value])
        throw BindingError("variable " + std::to_string(v.value) + " bound twice");
      seen[v.value] = true;
    }
  }
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto& c = f.clauses[i];
    if (c.literals.empty())
      throw EmptyClauseError("clause " + std::to_string(i) + " is empty");
    for (auto lit : c.literals) {
      auto v = lit.variable().value;
      if (v >= seen.size() || !seen[v])
        throw BindingError("variable " + std::to_string(v) + " is used but not bound");
    }
  }
}

OccurrenceProfile occurrence_profile(const PrenexFormula& f) {
  OccurrenceProfile p;
  BindingTable table(f);
  for (const auto& b : f.blocks)
    for (auto v : b.variables) p.per_variable.emplace(v, 0);
  for (const auto& c : f.clauses) {
    p.max_clause_size = std::max(p.max_clause_size, c.size());
    for (auto lit : c.literals) ++p.per_variable[lit.variable()];
  }
  for (const auto& [v, count] : p.per_variable) {
    if (!table.bound(v)) continue;
    if (f.blocks[table.block[v.value]].kind == Quantifier::Universal)
      p.max_universal = std::max(p.max_universal, count);
    else
      p.max_existential = std::max(p.max_existential, count);
  }
  return p;
}

std::uint32_t first_free_id(const PrenexFormula& f) {
  std::uint32_t top = std::max(f.variable_count, f.max_bound_variable());
  for (const auto& c : f.clauses)
    for (auto lit : c.literals) top = std::max(top, lit.variable().value);
  return top + 1;
}

PrenexFormula normalize_blocks(const PrenexFormula& f) {
  std::vector<std::size_t> occurrences;
  for (const auto& c : f.clauses)
    for (auto lit : c.literals) {
      auto v = lit.variable().value;
      if (occurrences.size() <= v) occurrences.resize(v + 1, 0);
      ++occurrences[v];
    }
  auto used = [&](VariableId v) {
    return v.value < occurrences.size() && occurrences[v.value] > 0;
  };

  PrenexFormula out;
  out.variable_count = f.variable_count;
  out.clauses = f.clauses;
  for (const auto& b : f.blocks) {
    QuantifierBlock kept{b.kind, {}};
    for (auto v : b.variables)
      if (b.kind == Quantifier::Existential || used(v)) kept.variables.push_back(v);
    if (kept.variables.empty()) continue;
    if (!out.blocks.empty() && out.blocks.back().kind == kept.kind) {
      auto& dst = out.blocks.back().variables;
      dst.insert(dst.end(), kept.variables.begin(), kept.variables.end());
    } else {
      out.blocks.push_back(std::move(kept));
    }
  }
  return out;
}

}  // namespace occred
