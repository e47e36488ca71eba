#include "support/brute_force.hpp"

#include <algorithm>
#include <stdexcept>

namespace occred::testing {

namespace {

std::int64_t count_unsat(const PrenexFormula& f, const std::vector<int>& value) {
  std::int64_t count = 0;
  for (const auto& c : f.clauses) {
    bool sat = std::any_of(c.literals.begin(), c.literals.end(), [&](Literal l) {
      return (value[l.variable().value] == 1) != l.negated();
    });
    if (!sat) ++count;
  }
  return count;
}

std::int64_t play(const PrenexFormula& f, std::size_t block, std::size_t pos,
                  std::vector<int>& value) {
  if (block == f.blocks.size()) return count_unsat(f, value);
  const auto& b = f.blocks[block];
  if (pos == b.variables.size()) return play(f, block + 1, 0, value);
  const auto v = b.variables[pos].value;
  value[v] = 0;
  auto a = play(f, block, pos + 1, value);
  value[v] = 1;
  auto c = play(f, block, pos + 1, value);
  value[v] = -1;
  return b.kind == Quantifier::Universal ? std::max(a, c) : std::min(a, c);
}

}  // namespace

std::int64_t reference_game_value(const PrenexFormula& f) {
  std::vector<int> value(first_free_id(f), -1);
  return play(f, 0, 0, value);
}

std::int64_t reference_min_unsat(const PrenexFormula& f, const Assignment& fixed) {
  const auto top = first_free_id(f);
  std::vector<std::uint32_t> free;
  for (std::uint32_t v = 1; v < top; ++v)
    if (!fixed.contains(VariableId(v))) free.push_back(v);
  if (free.size() > 24) throw std::invalid_argument("too many free variables");
  std::vector<int> value(top, 0);
  for (std::uint32_t v = 1; v < top; ++v)
    if (fixed.contains(VariableId(v))) value[v] = fixed[VariableId(v)] ? 1 : 0;
  std::int64_t best = INT64_MAX;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
    for (std::size_t i = 0; i < free.size(); ++i) value[free[i]] = (bits >> i) & 1;
    best = std::min(best, count_unsat(f, value));
  }
  return best;
}

bool bitsliced_satisfiable(const PrenexFormula& f) {
  const auto n = first_free_id(f) - 1;
  if (n > 24) throw std::invalid_argument("too many variables");
  // Variables 1..6 vary inside a word; the rest are fixed per word.
  static constexpr std::uint64_t kPattern[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  const std::uint32_t inner = std::min<std::uint32_t>(n, 6);
  const std::uint64_t outer = n > 6 ? (std::uint64_t{1} << (n - 6)) : 1;
  const std::uint64_t valid = inner == 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1u << inner)) - 1);
  for (std::uint64_t word = 0; word < outer; ++word) {
    std::uint64_t all = valid;
    for (const auto& c : f.clauses) {
      std::uint64_t sat = 0;
      for (auto l : c.literals) {
        const auto v = l.variable().value - 1;
        std::uint64_t bits = v < 6 ? kPattern[v] : (((word >> (v - 6)) & 1) ? ~std::uint64_t{0} : 0);
        sat |= l.negated() ? ~bits : bits;
      }
      all &= sat;
      if (!all) break;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace occred::testing
