#pragma once

#include <array>
#include <vector>

namespace fallkit {

/// Monotone 3-SAT formula: every clause is three positive or three negative
/// literals over distinct variables. Variables are 0-indexed; a literal is
/// +(i+1) or -(i+1) in DIMACS convention, stored here as signed 1-based ints.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  bool clause_positive(int j) const { return clauses[j][0] > 0; }

  /// True when every clause is all-positive or all-negative.
  bool is_monotone() const;

  /// Validates clause shape: exactly 3 literals over distinct in-range
  /// variables. Throws std::invalid_argument otherwise.
  void validate() const;

  bool satisfied_by(const std::vector<bool>& assignment) const;
};

}  // namespace fallkit
