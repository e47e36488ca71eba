#pragma once

#include <cstdint>
#include <vector>

#include "occred/assignment.hpp"
#include "occred/formula.hpp"

namespace occred::testing {

// Game value by recursion over the prefix with explicit assignments;
// written independently of the library's evaluators.
std::int64_t reference_game_value(const PrenexFormula& f);

// Minimum number of unsatisfied clauses over all assignments of the free
// variables, with `fixed` pinned. Variables are 1..n.
std::int64_t reference_min_unsat(const PrenexFormula& f, const Assignment& fixed);

// Satisfiability of a clause set over variables 1..n (n <= 24), evaluating
// 64 assignments per machine word.
bool bitsliced_satisfiable(const PrenexFormula& f);

}  // namespace occred::testing
