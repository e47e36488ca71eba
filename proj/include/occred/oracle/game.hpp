#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "occred/assignment.hpp"
#include "occred/formula.hpp"

namespace occred {

inline constexpr std::uint64_t kDefaultGameBudget = std::uint64_t{1} << 24;

struct GameLimits {
  // Search nodes (game_value) or leaves (game_value_bruteforce).
  std::uint64_t budget = kDefaultGameBudget;
};

struct GameValue {
  std::int64_t value = 0;
  std::uint64_t nodes = 0;
};

// Number of clauses with no true literal. Throws IncompleteAssignment unless
// `a` assigns every variable bound in f or occurring in it.
std::uint64_t unsat_count(const PrenexFormula& f, const Assignment& a);

// Universal blocks maximize and existential blocks minimize the number of
// unsatisfied clauses, outermost block first. Exact. Searches with
// alpha-beta after pure-literal fixing, splitting into independent
// components, and moving existential variables that share no clause with an
// inner variable to the end; the innermost existential choice is a minimum
// unsatisfiable-weight query. `fixed` pins variables before play starts.
// Throws BudgetExceeded after limits.budget search nodes.
GameValue game_value(const PrenexFormula& f, const GameLimits& limits = {},
                     const Assignment* fixed = nullptr);

// Plain enumeration of the whole game tree. Throws BudgetExceeded when
// 2^(bound variables) exceeds limits.budget.
GameValue game_value_bruteforce(const PrenexFormula& f, const GameLimits& limits = {});

bool verify_value_preservation(const PrenexFormula& f, const PrenexFormula& g,
                               const GameLimits& limits = {});
// [value(f) = 0] == [value(g) = 0].
bool verify_zero_preservation(const PrenexFormula& f, const PrenexFormula& g,
                              const GameLimits& limits = {});

// First assignment of the outermost block, in lexicographic order (false
// before true, first variable most significant), whose subgame attains the
// game value. Empty assignment for a formula without blocks.
Assignment outer_witness(const PrenexFormula& f, const GameLimits& limits = {});

}  // namespace occred
