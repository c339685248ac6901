#pragma once

#include <hyperfactor/combinatorics.hpp>
#include <hyperfactor/numeric.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hyperfactor {

/// Sparse multiplicity vector keyed by type, iterated in canonical order.
/// Entries with multiplicity zero are never stored.
class SolutionVector {
 public:
  using Map = std::map<TypeVector, Integer, CanonicalTypeOrder>;

  SolutionVector() = default;

  /// Adds `count` copies of `type` (count may be zero, which is a no-op).
  void add(const TypeVector& type, const Integer& count);
  /// Overwrites the multiplicity of `type`.
  void set(const TypeVector& type, const Integer& count);
  [[nodiscard]] Integer at(const TypeVector& type) const;

  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t support_size() const { return entries_.size(); }
  [[nodiscard]] const Map& entries() const { return entries_; }
  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }

  /// Total number of factors, sum of all multiplicities.
  [[nodiscard]] Integer total() const;

  /// Level coverage (A^T x)_i for i = 1..width, computed without a system.
  [[nodiscard]] std::vector<Integer> coverage(int width) const;

  friend bool operator==(const SolutionVector&, const SolutionVector&) = default;

 private:
  Map entries_;
};

/// A rational vector y with A_L y >= 0 and b_L^T y < 0 proves that
/// A_L^T x = b_L has no non-negative real solution.
struct FarkasCertificate {
  std::vector<Rational> y;  // one entry per level 1..k

  friend bool operator==(const FarkasCertificate&,
                         const FarkasCertificate&) = default;
};

/// The equality system A_L^T x = b_L: one row of A_L per (n, L)-type, one
/// equation per level.
class LinearSystem {
 public:
  /// Throws PreconditionError for n outside [1, 64] or invalid levels.
  LinearSystem(int n, LevelSet levels);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int k() const { return levels_.max(); }
  [[nodiscard]] const LevelSet& levels() const { return levels_; }
  [[nodiscard]] const std::vector<TypeVector>& types() const { return types_; }
  /// b_i = C(n, i) for i in L, 0 otherwise; index i-1.
  [[nodiscard]] const std::vector<Integer>& rhs() const { return rhs_; }
  /// Canonical row index of `type`, if it is a row of A_L.
  [[nodiscard]] std::optional<std::size_t> index_of(const TypeVector& type) const;

 private:
  int n_;
  LevelSet levels_;
  std::vector<TypeVector> types_;
  std::vector<Integer> rhs_;
  std::map<TypeVector, std::size_t, CanonicalTypeOrder> index_;
};

LinearSystem build_system(int n, const LevelSet& levels);

/// (A_L)^T x - b, one entry per level 1..k. Throws PreconditionError when x
/// mentions a type that is not a row of the system.
std::vector<Integer> evaluate_solution(const LinearSystem& sys,
                                       const SolutionVector& x);

struct CertificateCheck {
  bool valid = false;
  /// First row (canonical index) with negative product, if any.
  std::optional<std::size_t> violating_row;
  Rational row_value;
  /// b^T y. Reported whether or not it is negative.
  Rational objective;
};

/// Exact check of both Farkas conditions. Throws PreconditionError when the
/// certificate length differs from k.
CertificateCheck verify_certificate(const LinearSystem& sys,
                                    const FarkasCertificate& cert);

/// Scales y by a positive factor to the primitive integer vector on the
/// same ray. Validity is invariant under positive scaling.
FarkasCertificate normalize_certificate(const FarkasCertificate& cert);

struct LpOutcome {
  bool feasible = false;
  /// Rational x >= 0 with A^T x = b, indexed like sys.types() (when feasible).
  std::vector<Rational> x;
  /// A validated certificate (when infeasible).
  FarkasCertificate certificate;
};

/// Exact rational phase-one simplex with Bland's rule. Always returns one of
/// the two Farkas alternatives.
LpOutcome lp_feasible(const LinearSystem& sys);

struct SearchOptions {
  std::size_t type_limit = 200;
  /// Abandon the search (status Abandoned) after this many nodes.
  std::uint64_t node_limit = 5'000'000;
  /// Prune subtrees whose remaining system has no non-negative real
  /// solution. Sound; disabling it leaves only budget and support pruning.
  bool relaxation_pruning = true;
};

struct SearchResult {
  enum class Status { Found, Exhausted, Abandoned };
  Status status = Status::Exhausted;
  std::optional<SolutionVector> solution;
  std::uint64_t nodes = 0;
};

/// Depth-first search for a non-negative integer solution, branching on
/// types in canonical order with multiplicities tried from largest to
/// smallest. Throws LimitExceeded when the system has more than
/// `type_limit` rows.
SearchResult integer_search_small(const LinearSystem& sys,
                                  const SearchOptions& options = {});

}  // namespace hyperfactor
