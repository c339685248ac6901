#pragma once

#include <hyperfactor/numeric.hpp>

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hyperfactor {

/// Hard cap on the ground set size; subsets are 64-bit masks.
inline constexpr int kMaxGroundSize = 64;

/// C(a, b) for arbitrary integers, zero whenever a < 0, b < 0 or a < b.
/// With this convention Pascal's rule holds for every a >= 1 and any b.
Integer binomial(long a, long b);

/// Largest e with p^e | m. Throws PreconditionError unless p is prime and
/// m >= 1.
unsigned padic_valuation(unsigned long p, const Integer& m);

bool is_prime(unsigned long p);

/// A strictly increasing list of positive sizes. The largest element is k.
class LevelSet {
 public:
  LevelSet() = default;
  /// Sorts and deduplicates; throws on non-positive entries or an empty list.
  explicit LevelSet(std::vector<int> levels);
  LevelSet(std::initializer_list<int> levels);

  /// {1, ..., k}.
  static LevelSet up_to(int k);

  /// The empty family. Only meaningful as the degenerate target of the
  /// complement reduction (K_n^{<=0}).
  static LevelSet none() { return LevelSet(); }

  /// Throws PreconditionError unless all levels lie in [1, n].
  void validate_for(int n) const;

  [[nodiscard]] int max() const { return levels_.empty() ? 0 : levels_.back(); }
  [[nodiscard]] bool empty() const { return levels_.empty(); }
  [[nodiscard]] std::size_t size() const { return levels_.size(); }
  [[nodiscard]] bool contains(int level) const;
  /// True when the set is exactly {1, ..., max()}.
  [[nodiscard]] bool is_prefix() const;
  [[nodiscard]] std::span<const int> values() const { return levels_; }
  [[nodiscard]] auto begin() const { return levels_.begin(); }
  [[nodiscard]] auto end() const { return levels_.end(); }

  /// "1,2,3"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const LevelSet&, const LevelSet&) = default;

 private:
  std::vector<int> levels_;
};

/// A subset of [n] (n <= 64). Element e is stored in bit e-1.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t mask) : mask_(mask) {}
  Subset(std::initializer_list<int> elements);

  static Subset full(int n);

  [[nodiscard]] constexpr std::uint64_t mask() const { return mask_; }
  [[nodiscard]] constexpr int size() const { return std::popcount(mask_); }
  [[nodiscard]] constexpr bool empty() const { return mask_ == 0; }
  [[nodiscard]] constexpr bool contains(int e) const {
    return (mask_ >> (e - 1)) & 1U;
  }
  /// Smallest element, or 0 for the empty set.
  [[nodiscard]] constexpr int min_element() const {
    return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1;
  }
  [[nodiscard]] constexpr Subset with(int e) const {
    return Subset(mask_ | (std::uint64_t{1} << (e - 1)));
  }
  [[nodiscard]] constexpr Subset without(int e) const {
    return Subset(mask_ & ~(std::uint64_t{1} << (e - 1)));
  }
  [[nodiscard]] constexpr Subset complement_in(int n) const {
    return Subset(~mask_ & full_mask(n));
  }
  [[nodiscard]] constexpr bool disjoint(Subset other) const {
    return (mask_ & other.mask_) == 0;
  }
  [[nodiscard]] std::vector<int> elements() const;
  /// "{1,3,4}"
  [[nodiscard]] std::string to_string() const;

  static constexpr std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  friend constexpr bool operator==(Subset, Subset) = default;
  /// Colexicographic order: compare as binary numbers.
  friend constexpr auto operator<=>(Subset a, Subset b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  std::uint64_t mask_ = 0;
};

/// All k-subsets of [n] in ascending colexicographic order.
std::vector<Subset> subsets_of_size(int n, int k);

/// Part-multiplicity vector (lambda_1, ..., lambda_k) of a partition of n.
class TypeVector {
 public:
  TypeVector() = default;
  explicit TypeVector(std::vector<int> lambda);
  TypeVector(std::initializer_list<int> lambda);

  /// Number of entries (the largest level k).
  [[nodiscard]] int width() const { return static_cast<int>(lambda_.size()); }
  /// Multiplicity of parts of size `level` (1-based); 0 beyond the width.
  [[nodiscard]] int operator[](int level) const {
    return level >= 1 && level <= width() ? lambda_[level - 1] : 0;
  }
  /// Number of parts.
  [[nodiscard]] int size() const { return parts_; }
  /// Sum of level * multiplicity.
  [[nodiscard]] int weight() const;
  [[nodiscard]] std::span<const int> entries() const { return lambda_; }
  /// True when every non-zero entry sits on a level of L.
  [[nodiscard]] bool supported_on(const LevelSet& levels) const;

  /// "(1,0,2)"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const TypeVector&, const TypeVector&) = default;

 private:
  std::vector<int> lambda_;
  int parts_ = 0;
};

/// Canonical order: lexicographically decreasing on
/// (lambda_k, lambda_{k-1}, ..., lambda_1). Vectors of different widths are
/// compared as if zero-padded.
struct CanonicalTypeOrder {
  bool operator()(const TypeVector& a, const TypeVector& b) const;
};

/// Every (n, L)-type exactly once, in canonical order.
std::vector<TypeVector> enumerate_types(int n, const LevelSet& levels);

/// Number of (n, L)-types, by the coin-change recurrence. Cheap for any n.
Integer count_types(int n, const LevelSet& levels);

/// Number of 1-factors in any 1-factorization: sum over j in L of C(n-1, j-1).
Integer factor_count(int n, const LevelSet& levels);

/// Number of members of binom([n], L).
Integer family_size(int n, const LevelSet& levels);

}  // namespace hyperfactor
