#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "occred/formula.hpp"

namespace occred {

// Reads `p cnf <vars> <clauses>`, then `a`/`e` quantifier lines, then
// 0-terminated clauses (which may span lines). Lines starting with `c` are
// comments. Throws SyntaxError, BindingError or EmptyClauseError.
PrenexFormula parse_qdimacs(std::istream& in);
PrenexFormula parse_qdimacs(std::string_view text);
PrenexFormula read_qdimacs_file(const std::string& path);

// One quantifier line per block, one clause per line.
void write_qdimacs(std::ostream& out, const PrenexFormula& f);
std::string serialize_qdimacs(const PrenexFormula& f);

}  // namespace occred
