#include "occred/oracle/sat_solver.hpp"

#include <algorithm>
#include <cmath>

namespace occred::sat {

namespace {

double luby(double y, std::uint64_t x) {
  std::uint64_t size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

}  // namespace

std::uint32_t Solver::new_var() {
  auto v = static_cast<std::uint32_t>(assigns_.size());
  assigns_.push_back(kUndef);
  phase_.push_back(0);
  level_.push_back(0);
  reason_.push_back(kNoReason);
  activity_.push_back(0.0);
  seen_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
  heap_pos_.push_back(-1);
  heap_insert(v);
  return v;
}

std::uint32_t Solver::store(std::span<const Lit> lits, bool learnt) {
  auto c = static_cast<std::uint32_t>(clauses_.size());
  clauses_.push_back({static_cast<std::uint32_t>(arena_.size()),
                      static_cast<std::uint32_t>(lits.size()), 0.0f, learnt, false});
  arena_.insert(arena_.end(), lits.begin(), lits.end());
  return c;
}

void Solver::attach(std::uint32_t c) {
  Lit* l = lits(c);
  watches_[negate(l[0])].push_back({c, l[1]});
  watches_[negate(l[1])].push_back({c, l[0]});
}

bool Solver::add_clause(std::span<const Lit> input) {
  if (!ok_) return false;
  cancel_until(0);
  std::vector<Lit> ps(input.begin(), input.end());
  std::sort(ps.begin(), ps.end());
  std::vector<Lit> kept;
  Lit prev = UINT32_MAX;
  for (auto l : ps) {
    if (value(l) == 1 || (prev != UINT32_MAX && l == negate(prev))) return true;
    if (value(l) == 0 || l == prev) continue;
    kept.push_back(l);
    prev = l;
  }
  if (kept.empty()) return ok_ = false;
  if (kept.size() == 1) {
    enqueue(kept[0], kNoReason);
    return ok_ = (propagate() == kNoReason);
  }
  auto c = store(kept, false);
  ++original_count_;
  attach(c);
  return true;
}

void Solver::enqueue(Lit l, std::uint32_t reason) {
  auto v = var_of(l);
  assigns_[v] = is_negated(l) ? 0 : 1;
  level_[v] = decision_level();
  reason_[v] = reason;
  trail_.push_back(l);
}

std::uint32_t Solver::propagate() {
  std::uint32_t conflict = kNoReason;
  while (qhead_ < trail_.size()) {
    Lit p = trail_[qhead_++];
    auto& ws = watches_[p];
    std::size_t i = 0, j = 0;
    const Lit false_lit = negate(p);
    while (i < ws.size()) {
      Watcher w = ws[i];
      if (value(w.blocker) == 1) {
        ws[j++] = ws[i++];
        continue;
      }
      if (clauses_[w.clause].deleted) {
        ++i;
        continue;
      }
      Lit* c = lits(w.clause);
      const std::uint32_t size = clauses_[w.clause].size;
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      ++i;
      Lit first = c[0];
      if (first != w.blocker && value(first) == 1) {
        ws[j++] = {w.clause, first};
        continue;
      }
      bool moved = false;
      for (std::uint32_t k = 2; k < size; ++k) {
        if (value(c[k]) != 0) {
          c[1] = c[k];
          c[k] = false_lit;
          watches_[negate(c[1])].push_back({w.clause, first});
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = {w.clause, first};
      if (value(first) == 0) {
        conflict = w.clause;
        qhead_ = trail_.size();
        while (i < ws.size()) ws[j++] = ws[i++];
      } else {
        enqueue(first, w.clause);
      }
    }
    ws.resize(j);
    if (conflict != kNoReason) break;
  }
  return conflict;
}

bool Solver::redundant(Lit p, std::uint32_t abstract_levels) {
  analyze_stack_.clear();
  analyze_stack_.push_back(p);
  const std::size_t top = analyze_clear_.size();
  while (!analyze_stack_.empty()) {
    auto v = var_of(analyze_stack_.back());
    analyze_stack_.pop_back();
    auto r = reason_[v];
    Lit* c = lits(r);
    for (std::uint32_t k = 1; k < clauses_[r].size; ++k) {
      Lit q = c[k];
      auto u = var_of(q);
      if (seen_[u] || level_[u] == 0) continue;
      if (reason_[u] != kNoReason && ((1u << (level_[u] & 31)) & abstract_levels)) {
        seen_[u] = 1;
        analyze_stack_.push_back(q);
        analyze_clear_.push_back(u);
      } else {
        for (std::size_t k2 = top; k2 < analyze_clear_.size(); ++k2) seen_[analyze_clear_[k2]] = 0;
        analyze_clear_.resize(top);
        return false;
      }
    }
  }
  return true;
}

void Solver::analyze(std::uint32_t conflict, std::vector<Lit>& learnt, std::uint32_t& backtrack) {
  learnt.assign(1, 0);
  int pending = 0;
  Lit p = UINT32_MAX;
  std::size_t index = trail_.size();
  do {
    if (clauses_[conflict].learnt) bump_clause(conflict);
    Lit* c = lits(conflict);
    for (std::uint32_t k = (p == UINT32_MAX ? 0 : 1); k < clauses_[conflict].size; ++k) {
      Lit q = c[k];
      auto v = var_of(q);
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      bump_var(v);
      if (level_[v] >= decision_level())
        ++pending;
      else
        learnt.push_back(q);
    }
    while (!seen_[var_of(trail_[--index])]) {
    }
    p = trail_[index];
    conflict = reason_[var_of(p)];
    seen_[var_of(p)] = 0;
    --pending;
  } while (pending > 0);
  learnt[0] = negate(p);

  // Recursive minimization.
  analyze_clear_.clear();
  std::uint32_t abstract_levels = 0;
  for (std::size_t k = 1; k < learnt.size(); ++k) abstract_levels |= 1u << (level_[var_of(learnt[k])] & 31);
  for (std::size_t k = 1; k < learnt.size(); ++k) analyze_clear_.push_back(var_of(learnt[k]));
  std::size_t j = 1;
  for (std::size_t k = 1; k < learnt.size(); ++k) {
    auto v = var_of(learnt[k]);
    if (reason_[v] == kNoReason || !redundant(learnt[k], abstract_levels)) learnt[j++] = learnt[k];
  }
  learnt.resize(j);

  backtrack = 0;
  if (learnt.size() > 1) {
    std::size_t best = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k)
      if (level_[var_of(learnt[k])] > level_[var_of(learnt[best])]) best = k;
    std::swap(learnt[1], learnt[best]);
    backtrack = level_[var_of(learnt[1])];
  }
  for (auto v : analyze_clear_) seen_[v] = 0;
  seen_[var_of(learnt[0])] = 0;
}

void Solver::cancel_until(std::uint32_t level) {
  if (decision_level() <= level) return;
  for (std::size_t k = trail_.size(); k-- > trail_lim_[level];) {
    auto v = var_of(trail_[k]);
    phase_[v] = assigns_[v];
    assigns_[v] = kUndef;
    reason_[v] = kNoReason;
    if (heap_pos_[v] < 0) heap_insert(v);
  }
  trail_.resize(trail_lim_[level]);
  trail_lim_.resize(level);
  qhead_ = trail_.size();
}

Lit Solver::pick_branch() {
  while (!heap_.empty()) {
    auto v = heap_pop();
    if (assigns_[v] == kUndef) return make_lit(v, phase_[v] == 0);
  }
  return UINT32_MAX;
}

void Solver::bump_var(std::uint32_t v) {
  if ((activity_[v] += var_inc_) > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_pos_[v] >= 0) heap_up(static_cast<std::uint32_t>(heap_pos_[v]));
}

void Solver::bump_clause(std::uint32_t c) {
  if ((clauses_[c].activity += static_cast<float>(clause_inc_)) > 1e20f) {
    for (auto l : learnts_) clauses_[l].activity *= 1e-20f;
    clause_inc_ *= 1e-20;
  }
}

void Solver::reduce_db() {
  std::sort(learnts_.begin(), learnts_.end(), [&](auto a, auto b) {
    return clauses_[a].activity < clauses_[b].activity;
  });
  auto locked = [&](std::uint32_t c) {
    Lit first = lits(c)[0];
    return value(first) == 1 && reason_[var_of(first)] == c;
  };
  std::size_t keep_from = learnts_.size() / 2;
  std::vector<std::uint32_t> kept;
  for (std::size_t k = 0; k < learnts_.size(); ++k) {
    auto c = learnts_[k];
    if (k < keep_from && clauses_[c].size > 2 && !locked(c))
      clauses_[c].deleted = true;
    else
      kept.push_back(c);
  }
  learnts_ = std::move(kept);
  rebuild_watches();
}

void Solver::rebuild_watches() {
  for (auto& ws : watches_)
    ws.erase(std::remove_if(ws.begin(), ws.end(),
                            [&](const Watcher& w) { return clauses_[w.clause].deleted; }),
             ws.end());
  // Compact the arena once deleted clauses dominate it.
  std::size_t live = 0;
  for (const auto& c : clauses_)
    if (!c.deleted) live += c.size;
  if (live * 2 > arena_.size()) return;
  std::vector<Lit> arena;
  arena.reserve(live);
  for (auto& c : clauses_) {
    if (c.deleted) {
      c.size = 0;
      c.start = 0;
      continue;
    }
    auto start = static_cast<std::uint32_t>(arena.size());
    arena.insert(arena.end(), arena_.begin() + c.start, arena_.begin() + c.start + c.size);
    c.start = start;
  }
  arena_ = std::move(arena);
}

Result Solver::solve(std::span<const Lit> assumptions) {
  model_.clear();
  if (!ok_) return Result::Unsat;
  cancel_until(0);
  if (propagate() != kNoReason) {
    ok_ = false;
    return Result::Unsat;
  }
  if (max_learnts_ == 0.0) max_learnts_ = std::max(2000.0, original_count_ / 3.0);

  std::vector<Lit> learnt;
  std::uint64_t restart = 0;
  while (true) {
    const auto limit = static_cast<std::uint64_t>(luby(2.0, restart++) * 100);
    std::uint64_t local = 0;
    while (true) {
      auto conflict = propagate();
      if (conflict != kNoReason) {
        ++conflicts_;
        ++local;
        if (decision_level() == 0) {
          ok_ = false;
          return Result::Unsat;
        }
        std::uint32_t backtrack = 0;
        analyze(conflict, learnt, backtrack);
        cancel_until(backtrack);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          auto c = store(learnt, true);
          attach(c);
          learnts_.push_back(c);
          bump_clause(c);
          enqueue(learnt[0], c);
        }
        var_inc_ /= 0.95;
        clause_inc_ /= 0.999;
        continue;
      }
      if (local >= limit) {
        cancel_until(0);
        break;
      }
      if (static_cast<double>(learnts_.size()) - trail_.size() >= max_learnts_) {
        reduce_db();
        max_learnts_ *= 1.1;
      }
      Lit next = UINT32_MAX;
      while (decision_level() < assumptions.size()) {
        Lit a = assumptions[decision_level()];
        if (value(a) == 1) {
          trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
        } else if (value(a) == 0) {
          cancel_until(0);
          return Result::Unsat;
        } else {
          next = a;
          break;
        }
      }
      if (next == UINT32_MAX) {
        next = pick_branch();
        if (next == UINT32_MAX) {
          model_ = assigns_;
          cancel_until(0);
          return Result::Sat;
        }
      }
      trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
      enqueue(next, kNoReason);
    }
  }
}

void Solver::heap_insert(std::uint32_t v) {
  heap_pos_[v] = static_cast<std::int32_t>(heap_.size());
  heap_.push_back(v);
  heap_up(static_cast<std::uint32_t>(heap_.size() - 1));
}

void Solver::heap_up(std::uint32_t pos) {
  auto v = heap_[pos];
  while (pos > 0) {
    auto parent = (pos - 1) / 2;
    if (activity_[heap_[parent]] >= activity_[v]) break;
    heap_[pos] = heap_[parent];
    heap_pos_[heap_[pos]] = static_cast<std::int32_t>(pos);
    pos = parent;
  }
  heap_[pos] = v;
  heap_pos_[v] = static_cast<std::int32_t>(pos);
}

void Solver::heap_down(std::uint32_t pos) {
  auto v = heap_[pos];
  const auto n = static_cast<std::uint32_t>(heap_.size());
  while (true) {
    auto child = 2 * pos + 1;
    if (child >= n) break;
    if (child + 1 < n && activity_[heap_[child + 1]] > activity_[heap_[child]]) ++child;
    if (activity_[heap_[child]] <= activity_[v]) break;
    heap_[pos] = heap_[child];
    heap_pos_[heap_[pos]] = static_cast<std::int32_t>(pos);
    pos = child;
  }
  heap_[pos] = v;
  heap_pos_[v] = static_cast<std::int32_t>(pos);
}

std::uint32_t Solver::heap_pop() {
  auto top = heap_.front();
  heap_pos_[top] = -1;
  auto last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[last] = 0;
    heap_down(0);
  }
  return top;
}

}  // namespace occred::sat
