#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "occred/formula.hpp"

namespace occred {

// Partial map VariableId -> bool, dense over ids.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::uint32_t variable_count) : values_(variable_count + 1, kUnset) {}

  void set(VariableId v, bool value) {
    if (v.value >= values_.size()) values_.resize(v.value + 1, kUnset);
    values_[v.value] = value ? 1 : 0;
  }
  void clear(VariableId v) {
    if (v.value < values_.size()) values_[v.value] = kUnset;
  }
  bool contains(VariableId v) const {
    return v.value < values_.size() && values_[v.value] != kUnset;
  }
  // Precondition: contains(v).
  bool operator[](VariableId v) const { return values_[v.value] == 1; }
  std::optional<bool> get(VariableId v) const {
    if (!contains(v)) return std::nullopt;
    return values_[v.value] == 1;
  }
  bool value_of(Literal lit) const { return lit.satisfied_by((*this)[lit.variable()]); }

  bool covers(std::span<const VariableId> vars) const;
  // Every variable bound in f or used in one of its clauses has a value.
  bool covers(const PrenexFormula& f) const;

  std::uint32_t capacity() const { return static_cast<std::uint32_t>(values_.size()); }

 private:
  static constexpr std::int8_t kUnset = -1;
  std::vector<std::int8_t> values_;
};

// `v 1 -2 3 0` certificate line over the given variables (assigned ones only).
std::string certificate_line(const Assignment& a, std::span<const VariableId> vars);

}  // namespace occred
