#pragma once

#include <hyperfactor/combinatorics.hpp>
#include <hyperfactor/linear_system.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace hyperfactor {

/// Explicit separating-hyperplane families.
enum class CertificateFamily {
  /// L = [k], n = jk + r, 1 <= r <= k-2, j >= 3.
  ResidueWide,
  /// L = [k], n = 2k + r, 1 <= r <= k-2.
  ResidueTwo,
  /// L = [k], n = jk + k, j <= k-4.
  DivisibleShort,
  /// L = [k], n = jk + k - 1, j <= ceil(k/2)-3.
  MinusOneShort,
  /// Any L, n = jk + r, 1 <= r <= k-2.
  GeneralResidue,
  /// Any L without k-1, n = jk + k - 1.
  MissingPenultimate,
  /// L = {2,3,4}, n = 4j - 1.
  TwoThreeFour,
};

std::string_view family_name(CertificateFamily family);

inline constexpr CertificateFamily kAllFamilies[] = {
    CertificateFamily::ResidueWide,        CertificateFamily::ResidueTwo,
    CertificateFamily::DivisibleShort,     CertificateFamily::MinusOneShort,
    CertificateFamily::GeneralResidue,     CertificateFamily::MissingPenultimate,
    CertificateFamily::TwoThreeFour,
};

/// The family's y vector for (n, L) when the family's shape and congruence
/// conditions apply; nullopt otherwise. Not validated.
std::optional<FarkasCertificate> family_certificate(CertificateFamily family,
                                                    int n,
                                                    const LevelSet& levels);

/// True when (n, L) lies in the parameter range where the family is known
/// to separate (n > 2k for the [k] families, j >= 5 / j >= 2 for the
/// general-L families).
bool family_in_proven_range(CertificateFamily family, int n,
                            const LevelSet& levels);

/// Validity check without materialising A_L: the minimum of lambda . y over
/// all types is found by a knapsack recurrence over 0..n. Exact.
struct CertificateTest {
  bool valid = false;
  Rational min_row;
  std::optional<TypeVector> minimizing_type;
  Rational objective;
};

CertificateTest check_certificate(int n, const LevelSet& levels,
                                  const FarkasCertificate& cert);

struct TaggedCertificate {
  CertificateFamily family;
  FarkasCertificate certificate;
};

/// First family whose vector applies to (n, L) and passes validation.
std::optional<TaggedCertificate> make_certificate(int n,
                                                  const LevelSet& levels);

}  // namespace hyperfactor
