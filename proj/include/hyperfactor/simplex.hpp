#pragma once

#include <hyperfactor/numeric.hpp>

#include <vector>

namespace hyperfactor::detail {

struct PhaseOneResult {
  bool feasible = false;
  /// Basic solution, one entry per column.
  std::vector<Rational> x;
  /// Optimal phase-one duals u (one per row). When infeasible, u satisfies
  /// u . column <= 0 for every column and u . rhs > 0.
  std::vector<Rational> dual;
};

/// Decides whether sum_j x_j columns[j] = rhs has a solution x >= 0 using a
/// dense exact tableau. Every column has rhs.size() entries; rhs >= 0.
PhaseOneResult phase_one(const std::vector<std::vector<Integer>>& columns,
                         const std::vector<Integer>& rhs);

}  // namespace hyperfactor::detail
