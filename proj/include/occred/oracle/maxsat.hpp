#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "occred/oracle/sat_solver.hpp"

namespace occred::sat {

struct WeightedClause {
  std::vector<Lit> lits;
  std::uint32_t weight = 1;
};

// Minimum total weight of falsified clauses under assumptions, by iterated
// SAT calls over a k-bounded totalizer on per-clause relaxation variables.
class MaxSatOracle {
 public:
  MaxSatOracle(std::uint32_t var_count, std::vector<WeightedClause> clauses);

  // Window semantics (alpha < beta): returns v with
  //   v <= alpha  => optimum <= v,
  //   v >= beta   => optimum >= v,
  //   otherwise   v == optimum.
  // `floor` is a known lower bound on the optimum.
  std::int64_t minimize(std::span<const Lit> assumptions, std::int64_t alpha, std::int64_t beta,
                        std::int64_t floor = 0);

  // Exact optimum.
  std::int64_t optimum(std::span<const Lit> assumptions);

  // Model of the last satisfiable call (over the original variables).
  const std::vector<std::int8_t>& model() const { return model_; }
  void set_phase(std::uint32_t var, bool value) { solver_->set_phase(var, value); }

  std::uint64_t sat_calls() const { return sat_calls_; }
  std::uint64_t total_weight() const { return total_weight_; }

 private:
  void rebuild(std::uint64_t bound);
  // Is there a model of cost <= k? Records the model's true cost.
  bool feasible(std::span<const Lit> assumptions, std::uint64_t k, std::uint64_t& cost);
  std::uint64_t cost_of_model() const;

  std::uint32_t var_count_;
  std::vector<WeightedClause> clauses_;
  std::uint64_t total_weight_ = 0;
  std::unique_ptr<Solver> solver_;
  std::vector<std::int8_t> saved_phase_;
  std::uint64_t bound_ = 0;
  // outputs_[j] is true when at least j+1 relaxation inputs are true.
  std::vector<Lit> outputs_;
  std::vector<std::int8_t> model_;
  std::vector<Lit> query_;
  std::uint64_t sat_calls_ = 0;
};

}  // namespace occred::sat
