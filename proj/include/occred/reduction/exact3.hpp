#pragma once

#include "occred/formula.hpp"
#include "occred/reduction/universal.hpp"

namespace occred {

// Rewrites every clause to exactly three literal slots: (a) -> (a|z|z) and
// (a|b) -> (a|b|z) with a fresh universal z, longer clauses into a chain
// (u1|u2|z1)(~z1|u3|z2)...(~z_{r-3}|u_{r-1}|u_r) with fresh existentials.
// Pads join the innermost universal block (a leading one is created if there
// is none); chain variables join the innermost block when it is existential,
// otherwise a new trailing existential block.
StepResult step3_exact3(const PrenexFormula& f);

}  // namespace occred
