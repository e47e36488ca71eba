#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "occred/formula.hpp"

namespace occred::testing {

struct CorpusShape {
  std::uint32_t max_variables = 12;
  std::uint32_t max_clauses = 16;
  std::uint32_t max_clause_size = 5;
  // Bound on the summed input count 2*l over universal variables that
  // occur more than twice (they each get a gadget in step 1).
  std::uint32_t max_gadget_inputs = 12;
};

// Random formula with r in {1, 2} alternations: forall-exists or
// forall-exists-forall-exists.
PrenexFormula random_formula(std::mt19937_64& rng, const CorpusShape& shape = {});

// `count` formulas from seeds base_seed, base_seed + 1, ...
std::vector<PrenexFormula> build_corpus(std::size_t count, std::uint64_t base_seed,
                                        const CorpusShape& shape = {});

// Purely existential clause set over `variables` variables in which every
// variable occurs at most twice.
PrenexFormula random_occ2_formula(std::mt19937_64& rng, std::uint32_t variables);

// Random formula with arbitrary prefix for oracle cross-checks.
PrenexFormula random_small_formula(std::mt19937_64& rng, std::uint32_t max_variables,
                                   std::uint32_t max_clauses, std::uint32_t max_clause_size);

}  // namespace occred::testing
