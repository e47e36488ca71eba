#pragma once

#include <span>
#include <vector>

#include "occred/assignment.hpp"
#include "occred/formula.hpp"

namespace occred {

struct Occ2Result {
  bool satisfiable = false;
  // Total over `variables` when satisfiable.
  Assignment witness;
  // Variables left after elimination, each once positive and once negative.
  std::size_t residue_variables = 0;
  std::size_t residue_clauses = 0;
};

// Satisfiability of an existential clause set where every variable occurs at
// most twice. Variables occurring once, or twice with one sign, are set to
// satisfy their clauses and removed (ascending id, until nothing changes).
// What remains is satisfiable iff the clause-variable incidence graph has a
// matching saturating the clauses (Hopcroft-Karp).
// Throws OccurrenceBoundViolated on a third occurrence and
// PreconditionViolated when a clause uses a variable outside `variables`.
Occ2Result solve_exists_occ2(std::span<const Clause> clauses, std::span<const VariableId> variables);

}  // namespace occred
