#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace occred {

struct VariableId {
  std::uint32_t value = 0;

  constexpr VariableId() = default;
  constexpr explicit VariableId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(VariableId, VariableId) = default;
};

class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(VariableId var, bool negated) : var_(var), negated_(negated) {}

  // Signed DIMACS form: +v or -v.
  static Literal from_dimacs(std::int64_t lit);

  constexpr VariableId variable() const { return var_; }
  constexpr bool negated() const { return negated_; }
  constexpr Literal operator~() const { return Literal(var_, !negated_); }
  std::int64_t dimacs() const {
    return negated_ ? -static_cast<std::int64_t>(var_.value) : var_.value;
  }
  // True iff the literal evaluates to true when its variable takes `value`.
  constexpr bool satisfied_by(bool value) const { return value != negated_; }

  friend constexpr auto operator<=>(const Literal&, const Literal&) = default;

 private:
  VariableId var_{};
  bool negated_ = false;
};

enum class Quantifier { Universal, Existential };

std::string_view to_string(Quantifier q);

// Which construction produced a clause. Kinds Major..EdgeConsistency are the
// five clause families emitted by the universal gadget (step 1).
enum class ClauseKind {
  Original,
  Major,
  Outdegree,
  Flow,
  VDegree,
  EdgeConsistency,
  Consistency,
  Split,
  Pad,
};

std::string_view to_string(ClauseKind kind);
std::optional<ClauseKind> clause_kind_from_string(std::string_view name);

struct ClauseTag {
  ClauseKind kind = ClauseKind::Original;
  // Index of the source clause in the input of the step that produced this one.
  std::optional<std::size_t> origin;
  // Original variable whose gadget emitted the clause.
  std::optional<VariableId> gadget_owner;

  friend bool operator==(const ClauseTag&, const ClauseTag&) = default;
};

struct Clause {
  std::vector<Literal> literals;
  std::optional<ClauseTag> provenance;

  Clause() = default;
  explicit Clause(std::vector<Literal> lits, std::optional<ClauseTag> tag = std::nullopt)
      : literals(std::move(lits)), provenance(std::move(tag)) {}

  std::size_t size() const { return literals.size(); }
};

struct QuantifierBlock {
  Quantifier kind = Quantifier::Existential;
  std::vector<VariableId> variables;

  friend bool operator==(const QuantifierBlock&, const QuantifierBlock&) = default;
};

// Prenex CNF: blocks are ordered outermost first. Clauses form a multiset
// stored in a fixed order; duplicates and repeated literals are kept as-is.
struct PrenexFormula {
  std::vector<QuantifierBlock> blocks;
  std::vector<Clause> clauses;
  std::uint32_t variable_count = 0;

  std::size_t literal_count() const;
  std::uint32_t max_bound_variable() const;
};

// Same blocks, same variable count, same clauses with the same literal order.
// Provenance tags are not compared.
bool same_structure(const PrenexFormula& a, const PrenexFormula& b);

// Throws BindingError unless every clause variable is bound exactly once, and
// EmptyClauseError on a zero-length clause.
void validate(const PrenexFormula& f);

// Per-variable quantifier lookup, indexed by VariableId::value.
struct BindingTable {
  std::vector<int> block;  // -1 when unbound

  explicit BindingTable(const PrenexFormula& f);
  bool bound(VariableId v) const {
    return v.value < block.size() && block[v.value] >= 0;
  }
};

struct OccurrenceProfile {
  std::map<VariableId, std::size_t> per_variable;
  std::size_t max_universal = 0;
  std::size_t max_existential = 0;
  std::size_t max_clause_size = 0;
};

OccurrenceProfile occurrence_profile(const PrenexFormula& f);

// Smallest id above every bound or occurring variable and variable_count.
std::uint32_t first_free_id(const PrenexFormula& f);

// Merges adjacent blocks of the same kind, drops universal variables that
// never occur, and drops blocks left empty.
PrenexFormula normalize_blocks(const PrenexFormula& f);

}  // namespace occred

template <>
struct std::hash<occred::VariableId> {
  std::size_t operator()(occred::VariableId v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};
