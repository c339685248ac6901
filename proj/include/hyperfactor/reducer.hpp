#pragma once

#include <hyperfactor/factorization.hpp>

#include <cstdint>

namespace hyperfactor {

/// Extends a factorization of K_n^{<=n-k-1} (empty level set when n-k-1 is
/// 0) to K_n^{<=k}, n/2 <= k <= n-1, by adding one factor {S, complement}
/// for every unordered pair with n-k <= |S| <= k.
Factorization extend_by_complements(const Factorization& fact, int k);

struct RepairOptions {
  /// Run verify_factorization after every swap (slow; for tests).
  bool validate_each_swap = false;
};

struct RepairResult {
  /// Every set with size in [n-k, k] sits in a factor {S, complement}.
  Factorization repaired;
  /// The remaining factors: a factorization of K_n^{<=n-k-1}.
  Factorization residue;
  std::uint64_t swaps = 0;
};

/// Rearranges a factorization of K_n^{<=k}, n/2 <= k <= n-1, until it is
/// complement-paired on sizes n-k..k. For S of size >= n/2 (largest first,
/// colex within a size) whose factor is {S, T_1, ..., T_l} with l >= 2, the
/// T's trade places with the complement of S.
RepairResult repair_to_complement_paired(const Factorization& fact,
                                         const RepairOptions& options = {});

/// Deletes element n+1 = fact.n from every factor of a factorization of
/// binom([n+1], L'), dropping sets and factors that become empty. The
/// result covers binom([n], L' u (L'-1)); L' must not contain two
/// consecutive levels.
Factorization project_lift(const Factorization& fact);

}  // namespace hyperfactor
