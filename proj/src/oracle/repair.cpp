#include "occred/oracle/repair.hpp"

#include <map>
#include <string>

#include "occred/errors.hpp"

namespace occred {
namespace {

void check_trace(const PrenexFormula& f, const StepTrace& trace) {
  if (trace.step != 1) throw TraceMismatch("trace is not a step-1 trace");
  BindingTable table(f);
  std::map<VariableId, std::size_t> outdegree_clauses;
  for (const auto& c : f.clauses)
    if (c.provenance && c.provenance->kind == ClauseKind::Outdegree && c.provenance->gadget_owner)
      ++outdegree_clauses[*c.provenance->gadget_owner];
  for (const auto& g : trace.universal_gadgets) {
    const auto owner = std::to_string(g.owner.value);
    if (g.vertex_vars.size() != g.graph.vertex_count || g.edge_vars.size() != g.graph.edges.size())
      throw TraceMismatch("gadget of " + owner + " does not match its graph");
    for (auto v : g.vertex_vars)
      if (!table.bound(v)) throw TraceMismatch("gadget variable " + std::to_string(v.value) + " is unbound");
    for (auto v : g.edge_vars)
      if (!table.bound(v)) throw TraceMismatch("edge variable " + std::to_string(v.value) + " is unbound");
    std::size_t expected = 0;
    for (const auto& out : g.graph.out_edges())
      if (out.size() > 1) expected += out.size() * (out.size() - 1) / 2;
    expected *= g.duplication;
    if (outdegree_clauses[g.owner] != expected)
      throw TraceMismatch("gadget of " + owner + " has " + std::to_string(outdegree_clauses[g.owner]) +
                          " outdegree clauses, expected " + std::to_string(expected));
  }
}

bool satisfied(const Clause& c, const Assignment& a) {
  for (auto lit : c.literals)
    if (a.value_of(lit)) return true;
  return false;
}

}  // namespace

Assignment repair_outdegree(const PrenexFormula& f, const StepTrace& trace, const Assignment& a) {
  check_trace(f, trace);
  if (!a.covers(f)) throw IncompleteAssignment("assignment does not cover every variable");
  Assignment out = a;
  for (const auto& g : trace.universal_gadgets) {
    for (const auto& edges : g.graph.out_edges()) {
      std::size_t on = 0;
      for (auto e : edges) on += out[g.edge_vars[e]] ? 1 : 0;
      if (on < 2) continue;
      for (auto e : edges) out.set(g.edge_vars[e], false);
    }
  }
  return out;
}

MismatchCount count_mismatch(const PrenexFormula& f, const StepTrace& trace, const Assignment& a,
                             const Assignment& t) {
  check_trace(f, trace);
  if (!a.covers(f)) throw IncompleteAssignment("assignment does not cover every variable");
  MismatchCount count;
  for (const auto& c : f.clauses) {
    if (!c.provenance || satisfied(c, a)) continue;
    switch (c.provenance->kind) {
      case ClauseKind::Outdegree:
        throw PreconditionViolated("an outdegree clause is unsatisfied");
      case ClauseKind::Flow:
      case ClauseKind::VDegree:
      case ClauseKind::EdgeConsistency:
        ++count.broken;
        break;
      default:
        break;
    }
  }
  for (const auto& g : trace.universal_gadgets) {
    auto value = t.get(g.owner);
    if (!value) throw PreconditionViolated("t does not assign " + std::to_string(g.owner.value));
    for (auto v : g.graph.inputs)
      if (a[g.vertex_vars[v]] != *value)
        throw PreconditionViolated("input " + std::to_string(g.vertex_vars[v].value) + " disagrees with t");
    for (auto v : g.graph.outputs)
      if (a[g.vertex_vars[v]] != *value) ++count.mismatched_outputs;
  }
  return count;
}

bool check_mismatch_bound(const PrenexFormula& f, const StepTrace& trace, const Assignment& a,
                          const Assignment& t) {
  return count_mismatch(f, trace, a, t).holds();
}

}  // namespace occred
