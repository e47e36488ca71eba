#include "occred/oracle/maxsat.hpp"

#include <algorithm>
#include <limits>

namespace occred::sat {

MaxSatOracle::MaxSatOracle(std::uint32_t var_count, std::vector<WeightedClause> clauses)
    : var_count_(var_count), clauses_(std::move(clauses)) {
  for (const auto& c : clauses_) total_weight_ += c.weight;
  rebuild(std::min<std::uint64_t>(total_weight_, 4));
}

void MaxSatOracle::rebuild(std::uint64_t bound) {
  if (solver_) {
    saved_phase_.assign(var_count_, 0);
    for (std::uint32_t v = 0; v < var_count_ && v < solver_->model().size(); ++v)
      saved_phase_[v] = solver_->model()[v] == 1;
  }
  solver_ = std::make_unique<Solver>();
  bound_ = bound;
  for (std::uint32_t v = 0; v < var_count_; ++v) solver_->new_var();
  for (std::uint32_t v = 0; v < saved_phase_.size(); ++v) solver_->set_phase(v, saved_phase_[v]);

  std::vector<std::vector<Lit>> layer;
  std::vector<Lit> buffer;
  for (const auto& c : clauses_) {
    auto r = solver_->new_var();
    solver_->set_phase(r, false);
    buffer = c.lits;
    buffer.push_back(make_lit(r, false));
    solver_->add_clause(buffer);
    for (std::uint32_t k = 0; k < c.weight; ++k) layer.push_back({make_lit(r, false)});
  }

  // Totalizer: merge adjacent unary counters, keeping bound + 1 outputs.
  const std::uint64_t cap = bound_ + 1;
  while (layer.size() > 1) {
    std::vector<std::vector<Lit>> next;
    for (std::size_t i = 0; i + 1 < layer.size(); i += 2) {
      const auto& a = layer[i];
      const auto& b = layer[i + 1];
      const std::size_t width = std::min<std::uint64_t>(a.size() + b.size(), cap);
      std::vector<Lit> out(width);
      for (auto& o : out) {
        auto v = solver_->new_var();
        solver_->set_phase(v, false);
        o = make_lit(v, false);
      }
      for (std::size_t x = 0; x <= a.size(); ++x) {
        for (std::size_t y = 0; y <= b.size(); ++y) {
          if (x + y == 0) continue;
          std::vector<Lit> clause;
          if (x > 0) clause.push_back(negate(a[x - 1]));
          if (y > 0) clause.push_back(negate(b[y - 1]));
          clause.push_back(out[std::min<std::size_t>(x + y, width) - 1]);
          solver_->add_clause(clause);
        }
      }
      next.push_back(std::move(out));
    }
    if (layer.size() % 2 == 1) next.push_back(std::move(layer.back()));
    layer = std::move(next);
  }
  outputs_ = layer.empty() ? std::vector<Lit>{} : layer.front();
}

std::uint64_t MaxSatOracle::cost_of_model() const {
  std::uint64_t cost = 0;
  for (const auto& c : clauses_) {
    bool sat = false;
    for (auto l : c.lits)
      if ((model_[var_of(l)] == 1) != is_negated(l)) {
        sat = true;
        break;
      }
    if (!sat) cost += c.weight;
  }
  return cost;
}

bool MaxSatOracle::feasible(std::span<const Lit> assumptions, std::uint64_t k,
                            std::uint64_t& cost) {
  query_.assign(assumptions.begin(), assumptions.end());
  if (k < total_weight_) {
    if (k >= outputs_.size()) rebuild(std::min(total_weight_, std::max(2 * bound_, k)));
    query_.push_back(negate(outputs_[k]));
  }
  ++sat_calls_;
  if (solver_->solve(query_) != Result::Sat) return false;
  model_.assign(solver_->model().begin(), solver_->model().begin() + var_count_);
  cost = cost_of_model();
  return true;
}

std::int64_t MaxSatOracle::minimize(std::span<const Lit> assumptions, std::int64_t alpha,
                                    std::int64_t beta, std::int64_t floor) {
  std::uint64_t cost = 0;
  std::int64_t k = floor;
  if (alpha >= floor) {
    if (feasible(assumptions, static_cast<std::uint64_t>(alpha), cost))
      return static_cast<std::int64_t>(cost);
    k = alpha + 1;
  }
  for (; k < beta; ++k) {
    if (static_cast<std::uint64_t>(k) >= total_weight_) {
      feasible(assumptions, total_weight_, cost);
      return static_cast<std::int64_t>(cost);
    }
    if (feasible(assumptions, static_cast<std::uint64_t>(k), cost))
      return static_cast<std::int64_t>(cost);
  }
  return k;
}

std::int64_t MaxSatOracle::optimum(std::span<const Lit> assumptions) {
  return minimize(assumptions, -1, std::numeric_limits<std::int64_t>::max(), 0);
}

}  // namespace occred::sat
