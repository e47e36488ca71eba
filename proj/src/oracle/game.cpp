#include "occred/oracle/game.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "occred/errors.hpp"
#include "occred/oracle/maxsat.hpp"

namespace occred {

std::uint64_t unsat_count(const PrenexFormula& f, const Assignment& a) {
  if (!a.covers(f)) throw IncompleteAssignment("assignment does not cover every variable");
  std::uint64_t count = 0;
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (auto lit : c.literals)
      if (a.value_of(lit)) {
        sat = true;
        break;
      }
    if (!sat) ++count;
  }
  return count;
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct Lit {
  std::uint32_t var;
  bool negated;
  friend auto operator<=>(const Lit&, const Lit&) = default;
};

struct WClause {
  std::vector<Lit> lits;
  std::uint32_t weight = 1;
};

// The game after fixing and simplification, over dense variables.
struct Game {
  std::vector<int> level;         // per variable
  std::vector<Quantifier> kinds;  // per level
  std::vector<WClause> clauses;
  std::int64_t fixed_cost = 0;
  std::uint32_t var_count() const { return static_cast<std::uint32_t>(level.size()); }
};

Game build_game(const PrenexFormula& f, const Assignment* fixed) {
  validate(f);
  Game g;
  std::vector<std::uint32_t> dense(first_free_id(f), UINT32_MAX);
  for (const auto& b : f.blocks) {
    if (g.kinds.empty() || g.kinds.back() != b.kind) g.kinds.push_back(b.kind);
    for (auto v : b.variables) {
      if (fixed && fixed->contains(v)) continue;
      dense[v.value] = g.var_count();
      g.level.push_back(static_cast<int>(g.kinds.size()) - 1);
    }
  }
  std::map<std::vector<Lit>, std::uint32_t> merged;
  for (const auto& c : f.clauses) {
    std::vector<Lit> lits;
    bool sat = false;
    for (auto lit : c.literals) {
      if (fixed && fixed->contains(lit.variable())) {
        if (fixed->value_of(lit)) sat = true;
        continue;
      }
      lits.push_back({dense[lit.variable().value], lit.negated()});
    }
    if (sat) continue;
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    bool tautology = false;
    for (std::size_t i = 0; i + 1 < lits.size(); ++i)
      if (lits[i].var == lits[i + 1].var) tautology = true;
    if (tautology) continue;
    if (lits.empty()) {
      ++g.fixed_cost;
      continue;
    }
    ++merged[lits];
  }
  for (auto& [lits, w] : merged) g.clauses.push_back({lits, w});
  return g;
}

// Pure literals: an existential one is made true, a universal one false.
void fix_pure_literals(Game& g) {
  const auto n = g.var_count();
  std::vector<std::uint32_t> pos(n, 0), neg(n, 0);
  std::vector<std::vector<std::uint32_t>> occurs(n);
  std::vector<bool> active(g.clauses.size(), true);
  std::vector<std::uint32_t> live(g.clauses.size());
  for (std::uint32_t c = 0; c < g.clauses.size(); ++c) {
    live[c] = static_cast<std::uint32_t>(g.clauses[c].lits.size());
    for (auto l : g.clauses[c].lits) {
      (l.negated ? neg : pos)[l.var] += 1;
      occurs[l.var].push_back(c);
    }
  }
  std::vector<bool> done(n, false);
  std::vector<std::uint32_t> queue;
  auto consider = [&](std::uint32_t v) {
    if (!done[v] && (pos[v] == 0) != (neg[v] == 0)) {
      done[v] = true;
      queue.push_back(v);
    }
  };
  for (std::uint32_t v = 0; v < n; ++v) consider(v);
  std::vector<bool> removed_literal_var(n, false);
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    const bool positive = pos[v] > 0;
    const bool existential = g.kinds[g.level[v]] == Quantifier::Existential;
    removed_literal_var[v] = true;
    for (auto c : occurs[v]) {
      if (!active[c]) continue;
      if (existential) {
        active[c] = false;
        for (auto l : g.clauses[c].lits) {
          if (removed_literal_var[l.var] && l.var != v) continue;
          (l.negated ? neg : pos)[l.var] -= 1;
          consider(l.var);
        }
      } else {
        (positive ? pos : neg)[v] -= 1;
        if (--live[c] == 0) {
          active[c] = false;
          g.fixed_cost += g.clauses[c].weight;
        }
      }
    }
  }
  std::vector<WClause> kept;
  for (std::uint32_t c = 0; c < g.clauses.size(); ++c) {
    if (!active[c]) continue;
    WClause w{{}, g.clauses[c].weight};
    for (auto l : g.clauses[c].lits)
      if (!removed_literal_var[l.var]) w.lits.push_back(l);
    kept.push_back(std::move(w));
  }
  g.clauses = std::move(kept);
}

// One connected component, searched with alpha-beta.
class Search {
 public:
  Search(const Game& game, const std::vector<std::uint32_t>& vars,
         const std::vector<std::uint32_t>& clause_ids, std::uint64_t& nodes, std::uint64_t budget)
      : nodes_(nodes), budget_(budget) {
    std::vector<std::uint32_t> local(game.var_count(), UINT32_MAX);
    for (std::uint32_t i = 0; i < vars.size(); ++i) local[vars[i]] = i;
    const auto n = static_cast<std::uint32_t>(vars.size());
    level_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) level_[i] = game.level[vars[i]];
    kinds_ = game.kinds;
    for (auto c : clause_ids) {
      WClause w{{}, game.clauses[c].weight};
      for (auto l : game.clauses[c].lits) w.lits.push_back({local[l.var], l.negated});
      clauses_.push_back(std::move(w));
    }

    // Existential variables sharing no clause with a later level go last.
    std::vector<int> reach(level_);
    for (const auto& c : clauses_) {
      int top = 0;
      for (auto l : c.lits) top = std::max(top, level_[l.var]);
      for (auto l : c.lits) reach[l.var] = std::max(reach[l.var], top);
    }
    std::vector<std::uint32_t> occurrences(n, 0);
    for (const auto& c : clauses_)
      for (auto l : c.lits) ++occurrences[l.var];
    deferred_.assign(n, false);
    for (std::uint32_t v = 0; v < n; ++v)
      if (kinds_[level_[v]] == Quantifier::Existential && reach[v] == level_[v]) deferred_[v] = true;
    for (std::uint32_t v = 0; v < n; ++v)
      if (!deferred_[v]) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) {
      if (level_[a] != level_[b]) return level_[a] < level_[b];
      return occurrences[a] > occurrences[b];
    });

    occurs_.resize(n);
    for (std::uint32_t c = 0; c < clauses_.size(); ++c) {
      for (auto l : clauses_[c].lits) occurs_[l.var].push_back({c, l.negated});
      unsatisfied_weight_ += clauses_[c].weight;
    }
    false_count_.assign(clauses_.size(), 0);
    true_count_.assign(clauses_.size(), 0);
    value_.assign(n, -1);

    std::vector<sat::WeightedClause> wc;
    for (const auto& c : clauses_) {
      sat::WeightedClause w;
      w.weight = c.weight;
      for (auto l : c.lits) w.lits.push_back(sat::make_lit(l.var, l.negated));
      wc.push_back(std::move(w));
    }
    oracle_ = std::make_unique<sat::MaxSatOracle>(n, std::move(wc));
  }

  std::int64_t run() { return alphabeta(0, -1, kInf); }

 private:
  struct Occurrence {
    std::uint32_t clause;
    bool negated;
  };

  void assign(std::uint32_t v, bool value) {
    value_[v] = value ? 1 : 0;
    for (auto [c, negated] : occurs_[v]) {
      const auto w = clauses_[c].weight;
      if (value != negated) {
        if (true_count_[c]++ == 0) unsatisfied_weight_ -= w;
      } else if (++false_count_[c] == clauses_[c].lits.size()) {
        falsified_weight_ += w;
      }
    }
    assumptions_.push_back(sat::make_lit(v, !value));
  }

  void unassign(std::uint32_t v) {
    const bool value = value_[v] == 1;
    for (auto [c, negated] : occurs_[v]) {
      const auto w = clauses_[c].weight;
      if (value != negated) {
        if (--true_count_[c] == 0) unsatisfied_weight_ += w;
      } else if (false_count_[c]-- == clauses_[c].lits.size()) {
        falsified_weight_ -= w;
      }
    }
    value_[v] = -1;
    assumptions_.pop_back();
  }

  void tick() {
    if (++nodes_ > budget_)
      throw BudgetExceeded("game value search exceeded " + std::to_string(budget_) + " nodes");
  }

  std::int64_t alphabeta(std::size_t depth, std::int64_t alpha, std::int64_t beta) {
    tick();
    const std::int64_t lower = falsified_weight_;
    const std::int64_t upper = unsatisfied_weight_;
    if (lower == upper || lower >= beta) return lower;
    if (upper <= alpha) return upper;
    if (depth == order_.size()) return leaf(alpha, beta, lower);
    const auto var = order_[depth];
    const bool universal = kinds_[level_[var]] == Quantifier::Universal;
    bool first = false;
    if (var < hint_.size() && hint_[var] >= 0) first = (hint_[var] == 1) != universal;
    if (universal) {
      std::int64_t best = -1;
      for (bool value : {first, !first}) {
        assign(var, value);
        auto r = alphabeta(depth + 1, std::max(alpha, best), beta);
        unassign(var);
        best = std::max(best, r);
        if (best >= beta) break;
      }
      return best;
    }
    std::int64_t best = kInf;
    for (bool value : {first, !first}) {
      assign(var, value);
      auto r = alphabeta(depth + 1, alpha, std::min(beta, best));
      unassign(var);
      best = std::min(best, r);
      if (best <= alpha) break;
    }
    return best;
  }

  // Cost of a remembered existential response under the current assignment.
  std::int64_t cost_with(const std::vector<std::int8_t>& model) const {
    std::int64_t cost = 0;
    for (const auto& c : clauses_) {
      bool sat = false;
      for (auto l : c.lits) {
        auto v = value_[l.var] >= 0 ? value_[l.var] : model[l.var];
        if ((v == 1) != l.negated) {
          sat = true;
          break;
        }
      }
      if (!sat) cost += c.weight;
    }
    return cost;
  }

  std::int64_t leaf(std::int64_t alpha, std::int64_t beta, std::int64_t lower) {
    for (const auto& model : models_) {
      auto cost = cost_with(model);
      if (cost <= alpha || cost == lower) return cost;
    }
    auto v = oracle_->minimize(assumptions_, alpha, beta, lower);
    hint_ = oracle_->model();
    if (!hint_.empty()) {
      if (models_.size() == kRememberedModels) models_.erase(models_.begin());
      models_.push_back(hint_);
    }
    return v;
  }

  static constexpr std::size_t kRememberedModels = 8;
  std::vector<std::vector<std::int8_t>> models_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<int> level_;
  std::vector<Quantifier> kinds_;
  std::vector<WClause> clauses_;
  std::vector<bool> deferred_;
  std::vector<std::uint32_t> order_;
  std::vector<std::vector<Occurrence>> occurs_;
  std::vector<std::uint32_t> false_count_;
  std::vector<std::uint32_t> true_count_;
  std::vector<std::int8_t> value_;
  std::int64_t falsified_weight_ = 0;
  std::int64_t unsatisfied_weight_ = 0;
  std::vector<sat::Lit> assumptions_;
  std::vector<std::int8_t> hint_;
  std::unique_ptr<sat::MaxSatOracle> oracle_;
};

}  // namespace

GameValue game_value(const PrenexFormula& f, const GameLimits& limits, const Assignment* fixed) {
  Game g = build_game(f, fixed);
  fix_pure_literals(g);

  // Connected components over shared clauses.
  const auto n = g.var_count();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : g.clauses)
    for (std::size_t i = 1; i < c.lits.size(); ++i)
      parent[find(c.lits[i].var)] = find(c.lits[0].var);
  std::map<std::uint32_t, std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> parts;
  std::vector<bool> used(n, false);
  for (std::uint32_t c = 0; c < g.clauses.size(); ++c) {
    parts[find(g.clauses[c].lits[0].var)].second.push_back(c);
    for (auto l : g.clauses[c].lits) used[l.var] = true;
  }
  for (std::uint32_t v = 0; v < n; ++v)
    if (used[v]) parts[find(v)].first.push_back(v);

  GameValue result;
  result.value = g.fixed_cost;
  for (const auto& [root, part] : parts) {
    Search search(g, part.first, part.second, result.nodes, limits.budget);
    result.value += search.run();
  }
  return result;
}

GameValue game_value_bruteforce(const PrenexFormula& f, const GameLimits& limits) {
  validate(f);
  std::vector<VariableId> vars;
  std::vector<Quantifier> kind;
  for (const auto& b : f.blocks)
    for (auto v : b.variables) {
      vars.push_back(v);
      kind.push_back(b.kind);
    }
  const auto n = vars.size();
  if (n >= 63 || (std::uint64_t{1} << n) > limits.budget)
    throw BudgetExceeded("brute force needs 2^" + std::to_string(n) + " leaves");
  std::vector<std::uint32_t> index(first_free_id(f), 0);
  for (std::size_t i = 0; i < n; ++i) index[vars[i].value] = static_cast<std::uint32_t>(i);
  // Bit i of an assignment is the value of vars[i].
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
  for (const auto& c : f.clauses) {
    std::uint64_t pos = 0, neg = 0;
    for (auto lit : c.literals)
      (lit.negated() ? neg : pos) |= std::uint64_t{1} << index[lit.variable().value];
    masks.emplace_back(pos, neg);
  }
  GameValue result;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t bits) -> std::int64_t {
    if (i == n) {
      ++result.nodes;
      std::int64_t count = 0;
      for (auto [pos, neg] : masks)
        if ((bits & pos) == 0 && (~bits & neg) == 0) ++count;
      return count;
    }
    auto a = self(self, i + 1, bits);
    auto b = self(self, i + 1, bits | (std::uint64_t{1} << i));
    return kind[i] == Quantifier::Universal ? std::max(a, b) : std::min(a, b);
  };
  result.value = rec(rec, 0, 0);
  return result;
}

bool verify_value_preservation(const PrenexFormula& f, const PrenexFormula& g,
                               const GameLimits& limits) {
  return game_value(f, limits).value == game_value(g, limits).value;
}

bool verify_zero_preservation(const PrenexFormula& f, const PrenexFormula& g,
                              const GameLimits& limits) {
  return (game_value(f, limits).value == 0) == (game_value(g, limits).value == 0);
}

Assignment outer_witness(const PrenexFormula& f, const GameLimits& limits) {
  Assignment a(first_free_id(f));
  if (f.blocks.empty()) return a;
  GameLimits remaining = limits;
  auto spend = [&](std::uint64_t used) {
    remaining.budget = used >= remaining.budget ? 0 : remaining.budget - used;
  };
  auto target = game_value(f, remaining);
  spend(target.nodes);
  const auto& block = f.blocks.front().variables;
  if (block.size() >= 63 || (std::uint64_t{1} << block.size()) > limits.budget)
    throw BudgetExceeded("outermost block too large for witness enumeration");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << block.size()); ++bits) {
    for (std::size_t i = 0; i < block.size(); ++i)
      a.set(block[i], (bits >> (block.size() - 1 - i)) & 1);
    auto v = game_value(f, remaining, &a);
    spend(v.nodes + 1);
    if (v.value == target.value) return a;
  }
  throw Error("no outermost assignment attains the game value");
}

}  // namespace occred
