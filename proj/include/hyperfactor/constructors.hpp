#pragma once

#include <hyperfactor/combinatorics.hpp>
#include <hyperfactor/linear_system.hpp>

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace hyperfactor {

/// Which explicit construction covers a given (n, k).
///
/// Dispatch table for K_n^{<=k}, 1 <= k <= n (exactly one row applies):
///
///   k == 1                                      TrivialSmall
///   k >= n/2                                    ComplementReduction
///   n = (j+1)k,   n >= k^2 - k                  DivGeneric
///   n = (j+1)k,   n == k^2 - 2k                 DivEdge
///   n = (j+1)k-1, j >= ceil(k/2)-2, k even      Minus1EvenLift
///   n = (j+1)k-1, j >= ceil(k/2)-2, k odd, with n = (k^2-k-2)/2 + t k:
///                 t >= (k-3)/2                  Minus1OddLift
///                 t == (k-5)/2                  Minus1OddAbc
///                 0 <= t <= (k-7)/2             Minus1OddRst
///   anything else                               (no construction exists)
///
/// GeneralLDiv is used only for level sets other than {1..k}.
enum class Branch {
  DivGeneric,
  DivEdge,
  Minus1EvenLift,
  Minus1OddLift,
  Minus1OddAbc,
  Minus1OddRst,
  GeneralLDiv,
  ComplementReduction,
  TrivialSmall,
};

std::string_view branch_name(Branch branch);

struct ConstructionPlan {
  Branch branch = Branch::TrivialSmall;
  int n = 0;
  int k = 0;
  /// n = j*k + r with the branch-specific meaning of j (see table); -1 if
  /// unused.
  int j = -1;
  int r = -1;
  /// Odd-k offset n = (k^2-k-2)/2 + t*k; -1 if unused.
  int t = -1;
  /// Lifted sub-problem (n+1, L') for the lift branches.
  std::optional<int> lifted_n;
  std::optional<LevelSet> lifted_levels;
};

/// Selects the row of the dispatch table for K_n^{<=k}. Returns nullopt when
/// no construction applies (the instance is not 1-factorable).
std::optional<ConstructionPlan> plan_for(int n, int k);

struct Construction;

/// Factorize binom([n], levels) from a solution of its system.
struct DirectPart {
  int n = 0;
  LevelSet levels;
  SolutionVector solution;
};

/// Factorize binom([n+1], lifted.levels) and then delete element n+1 from
/// every factor.
struct LiftedPart {
  int n = 0;
  DirectPart lifted;
};

/// Families on the same ground set with disjoint level sets; their
/// factorizations are concatenated.
struct UnionPart {
  int n = 0;
  std::vector<Construction> parts;
};

/// K_n^{<=k} for k >= n/2: a factorization of K_n^{<=n-k'-1} (absent when
/// that family is empty) extended by complement pairs of all sizes in
/// [n-k', k'] with k' = min(k, n-1); when k == n the whole ground set is
/// appended as a factor of its own.
struct ComplementPart {
  int n = 0;
  int k = 0;
  std::vector<Construction> inner;  // zero or one element
  bool whole_set = false;
};

struct Construction {
  ConstructionPlan plan;
  std::variant<DirectPart, LiftedPart, UnionPart, ComplementPart> body;

  /// Ground set size of the produced factorization.
  [[nodiscard]] int n() const;
  /// Level set of the produced factorization.
  [[nodiscard]] LevelSet levels() const;
};

/// Explicit solution for n = jk + k, j >= k-3, n > 2k.
SolutionVector construct_div(int n, int k);

/// Construction for n = jk + k - 1, j >= ceil(k/2)-2, n > 2k: a lift to
/// n+1 or, for odd k with small t, explicit upper levels joined with a
/// recursive construction of the lower levels.
Construction construct_minus1(int n, int k);

/// Full construction for K_n^{<=k}; nullopt when plan_for finds no branch.
std::optional<Construction> construct_for(int n, int k);

/// Solution for k | n and a general level set. Returns nullopt (not
/// applicable) when a multiplicity would be negative.
std::optional<SolutionVector> construct_general_L_div(int n,
                                                      const LevelSet& levels);

/// Explicit solution on the lifted system (n+1, L') with L' the levels of
/// the parity of k: multiplicity C(n+1, i)/(k/gcd(k,i)) on the two-level
/// type for every i in L' below k, the pure top type for the rest.
SolutionVector construct_lifted(int n, int k);

/// Levels {(k+2t+1)/2, ..., k} handled explicitly in the odd-k branches.
LevelSet upper_levels(int k, int t);

/// Three-type solution on levels {k-2, k-1, k} for odd k, n = k^2-3k-1.
struct ThreeTypeSolution {
  int k = 0;
  int n = 0;
  Integer a, b, c;
};

ThreeTypeSolution three_type_solution(int k);
SolutionVector to_solution(const ThreeTypeSolution& s);

/// Solution on levels {(k+1)/2+t, ..., k} for odd k >= 7, 0 <= t <= (k-7)/2,
/// n = (k^2-k-2)/2 + t k, built from types R, S_0..S_s, T_1..T_s with
/// s = (k-5)/2 - t.
struct RstSolution {
  int k = 0;
  int t = 0;
  int n = 0;
  Integer x;  ///< multiplicity of R
  Integer y;  ///< total multiplicity of all S_i and T_i
  Integer A;  ///< sum of i * a_i, i >= 1
  Integer B;  ///< sum of i * b_i, i >= 1
  std::vector<Integer> a;  ///< a[0..s], multiplicity of S_i
  std::vector<Integer> b;  ///< b[1..s], multiplicity of T_i; b[0] is unused (0)

  [[nodiscard]] int s() const { return (k - 5) / 2 - t; }
};

RstSolution rst_solution(int k, int t);
SolutionVector to_solution(const RstSolution& s);

/// Types of the R/S/T construction, exposed for identity checks.
TypeVector type_R(int k, int t);
TypeVector type_S(int k, int t, int i);
TypeVector type_T(int k, int t, int i);

}  // namespace hyperfactor
