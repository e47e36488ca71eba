#include "occred/assignment.hpp"

#include <sstream>

namespace occred {

bool Assignment::covers(std::span<const VariableId> vars) const {
  for (auto v : vars)
    if (!contains(v)) return false;
  return true;
}

bool Assignment::covers(const PrenexFormula& f) const {
  for (const auto& b : f.blocks)
    if (!covers(b.variables)) return false;
  for (const auto& c : f.clauses)
    for (auto lit : c.literals)
      if (!contains(lit.variable())) return false;
  return true;
}

std::string certificate_line(const Assignment& a, std::span<const VariableId> vars) {
  std::ostringstream out;
  out << 'v';
  for (auto v : vars) {
    if (!a.contains(v)) continue;
    out << ' ' << (a[v] ? "" : "-") << v.value;
  }
  out << " 0";
  return out.str();
}

}  // namespace occred
