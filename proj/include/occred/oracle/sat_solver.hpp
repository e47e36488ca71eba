#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace occred::sat {

// Literal 2*v (positive) or 2*v+1 (negative) over variables 0..n-1.
using Lit = std::uint32_t;

constexpr Lit make_lit(std::uint32_t var, bool negated) { return 2 * var + (negated ? 1 : 0); }
constexpr std::uint32_t var_of(Lit l) { return l >> 1; }
constexpr bool is_negated(Lit l) { return l & 1; }
constexpr Lit negate(Lit l) { return l ^ 1; }

enum class Result { Sat, Unsat };

// Conflict-driven clause learning with two watched literals, first-UIP
// learning, activity-ordered decisions, phase saving, Luby restarts and
// solving under assumptions. Clauses added between calls are kept.
class Solver {
 public:
  std::uint32_t new_var();
  std::uint32_t var_count() const { return static_cast<std::uint32_t>(assigns_.size()); }

  // Returns false once the clause set is unsatisfiable without assumptions.
  bool add_clause(std::span<const Lit> lits);

  Result solve(std::span<const Lit> assumptions = {});

  // Model of the last Sat answer.
  bool model_value(std::uint32_t var) const { return model_[var] == 1; }
  const std::vector<std::int8_t>& model() const { return model_; }

  // Preferred polarity for the next decisions on `var`.
  void set_phase(std::uint32_t var, bool value) { phase_[var] = value ? 1 : 0; }

  std::uint64_t conflicts() const { return conflicts_; }

 private:
  static constexpr std::uint32_t kNoReason = UINT32_MAX;
  static constexpr std::int8_t kUndef = -1;

  struct Watcher {
    std::uint32_t clause;
    Lit blocker;
  };
  struct ClauseInfo {
    std::uint32_t start;
    std::uint32_t size;
    float activity;
    bool learnt;
    bool deleted;
  };

  std::int8_t value(Lit l) const {
    auto a = assigns_[var_of(l)];
    return a == kUndef ? kUndef : static_cast<std::int8_t>(a ^ static_cast<std::int8_t>(is_negated(l)));
  }
  Lit* lits(std::uint32_t c) { return &arena_[clauses_[c].start]; }
  std::uint32_t decision_level() const { return static_cast<std::uint32_t>(trail_lim_.size()); }

  std::uint32_t store(std::span<const Lit> lits, bool learnt);
  void attach(std::uint32_t c);
  void enqueue(Lit l, std::uint32_t reason);
  std::uint32_t propagate();
  void analyze(std::uint32_t conflict, std::vector<Lit>& learnt, std::uint32_t& backtrack);
  bool redundant(Lit l, std::uint32_t abstract_levels);
  void cancel_until(std::uint32_t level);
  Lit pick_branch();
  void bump_var(std::uint32_t v);
  void bump_clause(std::uint32_t c);
  void reduce_db();
  void rebuild_watches();

  void heap_insert(std::uint32_t v);
  void heap_up(std::uint32_t pos);
  void heap_down(std::uint32_t pos);
  std::uint32_t heap_pop();

  std::vector<std::int8_t> assigns_;
  std::vector<std::int8_t> phase_;
  std::vector<std::int8_t> model_;
  std::vector<std::uint32_t> level_;
  std::vector<std::uint32_t> reason_;
  std::vector<double> activity_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<Lit> trail_;
  std::vector<std::uint32_t> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<Lit> arena_;
  std::vector<ClauseInfo> clauses_;
  std::vector<std::uint32_t> learnts_;
  std::size_t original_count_ = 0;

  std::vector<std::uint32_t> heap_;
  std::vector<std::int32_t> heap_pos_;

  double var_inc_ = 1.0;
  double clause_inc_ = 1.0;
  double max_learnts_ = 0.0;
  bool ok_ = true;
  std::uint64_t conflicts_ = 0;
  std::vector<Lit> analyze_stack_;
  std::vector<std::uint32_t> analyze_clear_;
};

}  // namespace occred::sat
