#pragma once

#include <hyperfactor/factorization.hpp>
#include <hyperfactor/linear_system.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hyperfactor {

struct Violation {
  enum class Kind {
    GroundSet,       ///< n outside [1, 64] or invalid level set
    NotPartition,    ///< a factor's sets overlap or miss part of [n]
    SizeOutsideL,    ///< a set has a size not in L (empty sets included)
    DuplicateSet,    ///< a set appears in more than one place
    MissingSet,      ///< a set of binom([n], L) appears nowhere
    FactorCount,     ///< number of factors differs from M
    Negative,        ///< negative multiplicity in a solution
    UnknownType,     ///< a solution entry that is not an (n, L)-type
    Residual,        ///< a level equation does not balance
  };
  Kind kind;
  std::string message;
};

struct VerificationReport {
  std::vector<Violation> violations;
  /// Violations of one kind beyond the listing cap are only counted here.
  std::uint64_t suppressed = 0;

  [[nodiscard]] bool ok() const { return violations.empty() && suppressed == 0; }
  [[nodiscard]] bool has(Violation::Kind kind) const;
  /// First few messages joined by "; ".
  [[nodiscard]] std::string summary(std::size_t max_items = 5) const;
};

struct VerifyOptions {
  /// Refuse (LimitExceeded) when binom([n], L) has more sets than this.
  std::uint64_t max_sets = 50'000'000;
  /// Listed violations per kind; the rest are counted in `suppressed`.
  std::size_t max_listed = 20;
};

/// Checks a factorization against (n, L) only: partitions of [n], sizes in
/// L, every set of binom([n], L) exactly once, M factors. Reports every
/// violation rather than stopping at the first.
VerificationReport verify_factorization(const Factorization& fact,
                                        const VerifyOptions& options = {});

/// Non-negativity and zero residual of x on sys, one violation per level.
VerificationReport verify_solution(const LinearSystem& sys,
                                   const SolutionVector& x);

}  // namespace hyperfactor
