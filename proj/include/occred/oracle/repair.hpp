#pragma once

#include "occred/assignment.hpp"
#include "occred/formula.hpp"
#include "occred/reduction/trace.hpp"

namespace occred {

// For every gadget vertex with two or more true outgoing edge variables, sets
// all of them false. The result satisfies every Outdegree clause and leaves no
// more clauses unsatisfied than `a` did (each cleared vertex frees at least
// R = d^2 duplicated clauses and breaks at most d^2 flow or V-degree ones).
// Throws TraceMismatch when `trace` does not describe step-1 gadgets of f,
// IncompleteAssignment when `a` does not cover f.
Assignment repair_outdegree(const PrenexFormula& f, const StepTrace& trace, const Assignment& a);

struct MismatchCount {
  std::size_t mismatched_outputs = 0;  // k
  std::size_t broken = 0;              // unsatisfied Flow, VDegree, EdgeConsistency clauses
  bool holds() const { return broken >= mismatched_outputs; }
};

// `t` assigns the original universal variables. Requires `a` to satisfy every
// Outdegree clause and to give each gadget input the value t(owner), else
// throws PreconditionViolated.
MismatchCount count_mismatch(const PrenexFormula& f, const StepTrace& trace, const Assignment& a,
                             const Assignment& t);
bool check_mismatch_bound(const PrenexFormula& f, const StepTrace& trace, const Assignment& a,
                          const Assignment& t);

}  // namespace occred
