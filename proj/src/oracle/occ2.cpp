#include "occred/oracle/occ2.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <string>

#include "occred/errors.hpp"

namespace occred {
namespace {

// Hopcroft-Karp on a left-saturation question. adj[l] lists right vertices.
class Matching {
 public:
  Matching(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t right)
      : adj_(adj), match_left_(adj.size(), kNone), match_right_(right, kNone), dist_(adj.size()) {}

  std::size_t run() {
    std::size_t size = 0;
    while (bfs())
      for (std::uint32_t l = 0; l < adj_.size(); ++l)
        if (match_left_[l] == kNone && dfs(l)) ++size;
    return size;
  }

  std::uint32_t partner(std::uint32_t l) const { return match_left_[l]; }

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  bool bfs() {
    std::queue<std::uint32_t> q;
    bool found = false;
    for (std::uint32_t l = 0; l < adj_.size(); ++l) {
      dist_[l] = match_left_[l] == kNone ? 0 : kNone;
      if (dist_[l] == 0) q.push(l);
    }
    while (!q.empty()) {
      auto l = q.front();
      q.pop();
      for (auto r : adj_[l]) {
        auto next = match_right_[r];
        if (next == kNone) {
          found = true;
        } else if (dist_[next] == kNone) {
          dist_[next] = dist_[l] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(std::uint32_t l) {
    for (auto r : adj_[l]) {
      auto next = match_right_[r];
      if (next == kNone || (dist_[next] == dist_[l] + 1 && dfs(next))) {
        match_left_[l] = r;
        match_right_[r] = l;
        return true;
      }
    }
    dist_[l] = kNone;
    return false;
  }

  const std::vector<std::vector<std::uint32_t>>& adj_;
  std::vector<std::uint32_t> match_left_, match_right_, dist_;
};

}  // namespace

Occ2Result solve_exists_occ2(std::span<const Clause> clauses, std::span<const VariableId> variables) {
  std::map<VariableId, std::uint32_t> index;
  for (auto v : variables) index.emplace(v, static_cast<std::uint32_t>(index.size()));
  const auto n = static_cast<std::uint32_t>(index.size());
  std::vector<VariableId> ids(n);
  for (auto [v, i] : index) ids[i] = v;

  struct Occurrence {
    std::uint32_t clause;
    bool negated;
  };
  std::vector<std::vector<Occurrence>> occurs(n);
  for (std::uint32_t c = 0; c < clauses.size(); ++c) {
    for (auto lit : clauses[c].literals) {
      auto it = index.find(lit.variable());
      if (it == index.end())
        throw PreconditionViolated("variable " + std::to_string(lit.variable().value) +
                                   " is not in the variable set");
      auto& occ = occurs[it->second];
      if (occ.size() == 2)
        throw OccurrenceBoundViolated("variable " + std::to_string(lit.variable().value) +
                                      " occurs more than twice");
      occ.push_back({c, lit.negated()});
    }
  }

  Occ2Result result;
  result.witness = Assignment(ids.empty() ? 0 : ids.back().value);
  std::vector<bool> removed(clauses.size(), false);
  std::vector<bool> decided(n, false);
  // Occurrences in clauses not yet removed.
  auto live = [&](std::uint32_t v) {
    std::vector<Occurrence> out;
    for (auto o : occurs[v])
      if (!removed[o.clause]) out.push_back(o);
    return out;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (decided[v]) continue;
      auto occ = live(v);
      if (occ.empty()) continue;
      if (occ.size() == 2 && occ[0].negated != occ[1].negated) continue;
      decided[v] = true;
      result.witness.set(ids[v], !occ[0].negated);
      for (auto o : occ) removed[o.clause] = true;
      changed = true;
    }
  }

  // Residue: clause -> variables with a live occurrence in it.
  std::vector<std::uint32_t> residue_clauses;
  std::vector<std::uint32_t> clause_slot(clauses.size(), 0);
  for (std::uint32_t c = 0; c < clauses.size(); ++c)
    if (!removed[c]) {
      clause_slot[c] = static_cast<std::uint32_t>(residue_clauses.size());
      residue_clauses.push_back(c);
    }
  std::vector<std::vector<std::uint32_t>> adj(residue_clauses.size());
  for (std::uint32_t v = 0; v < n; ++v) {
    if (decided[v]) continue;
    auto occ = live(v);
    if (occ.empty()) continue;
    ++result.residue_variables;
    for (auto o : occ) {
      auto& row = adj[clause_slot[o.clause]];
      if (std::find(row.begin(), row.end(), v) == row.end()) row.push_back(v);
    }
  }
  result.residue_clauses = residue_clauses.size();

  for (std::uint32_t v = 0; v < n; ++v)
    if (!decided[v]) result.witness.set(ids[v], false);
  Matching matching(adj, n);
  if (matching.run() < residue_clauses.size()) {
    result.witness = Assignment();
    return result;
  }
  for (std::uint32_t slot = 0; slot < residue_clauses.size(); ++slot) {
    auto v = matching.partner(slot);
    for (auto lit : clauses[residue_clauses[slot]].literals)
      if (lit.variable() == ids[v]) {
        result.witness.set(ids[v], !lit.negated());
        break;
      }
  }
  for (const auto& c : clauses) {
    bool sat = std::any_of(c.literals.begin(), c.literals.end(),
                           [&](Literal l) { return result.witness.value_of(l); });
    if (!sat) throw Error("occurrence-2 witness leaves a clause unsatisfied");
  }
  result.satisfiable = true;
  return result;
}

}  // namespace occred
