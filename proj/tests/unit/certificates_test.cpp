#include <hyperfactor/certificates.hpp>
#include <hyperfactor/constructors.hpp>
#include <hyperfactor/errors.hpp>

#include <gtest/gtest.h>

using namespace hyperfactor;

namespace {

FarkasCertificate cert(std::initializer_list<Rational> y) { return {std::vector<Rational>(y)}; }

}  // namespace

TEST(MakeCertificate, KnownVectors) {
  const auto eighteen = make_certificate(18, LevelSet::up_to(6));
  ASSERT_TRUE(eighteen);
  EXPECT_EQ(eighteen->certificate, cert({3, 3, 3, 1, -1, 0}));
  EXPECT_EQ(eighteen->family, CertificateFamily::DivisibleShort);

  const auto twenty_six = make_certificate(26, LevelSet::up_to(9));
  ASSERT_TRUE(twenty_six);
  EXPECT_EQ(twenty_six->certificate, cert({3, 3, 3, 3, 3, 1, -1, 2, -1}));
  EXPECT_EQ(twenty_six->family, CertificateFamily::MinusOneShort);

  const auto seven = make_certificate(7, LevelSet::up_to(3));
  ASSERT_TRUE(seven);
  EXPECT_EQ(seven->certificate, cert({2, Rational(1, 2), -1}));
  EXPECT_EQ(seven->family, CertificateFamily::ResidueTwo);

  const auto general = make_certificate(11, LevelSet{2, 3, 4});
  ASSERT_TRUE(general);
  EXPECT_EQ(general->certificate, cert({0, Rational(-1, 2), 2, -1}));
}

TEST(MakeCertificate, NoneForFactorableInstances) {
  EXPECT_FALSE(make_certificate(12, LevelSet::up_to(3)));
  EXPECT_FALSE(make_certificate(11, LevelSet::up_to(3)));
  EXPECT_FALSE(make_certificate(12, LevelSet{2, 4}));
}

TEST(FamilyCertificate, ResidueWideShape) {
  // n = 3*5 + 2: (j/2, j, (j-1)/2, (j-1)/2, -1) with j = 3.
  const auto y = family_certificate(CertificateFamily::ResidueWide, 17, LevelSet::up_to(5));
  ASSERT_TRUE(y);
  EXPECT_EQ(*y, cert({Rational(3, 2), 3, 1, 1, -1}));
}

TEST(FamilyCertificate, ResidueTwoParityBranches) {
  // r and k of different parity: ones up to floor((r+k)/2).
  const auto odd = family_certificate(CertificateFamily::ResidueTwo, 13, LevelSet::up_to(6));
  ASSERT_TRUE(odd);
  EXPECT_EQ(*odd, cert({2, 1, 1, 0, 0, -1}));
  // Same parity: ones below the midpoint, a half at it.
  const auto even = family_certificate(CertificateFamily::ResidueTwo, 11, LevelSet::up_to(5));
  ASSERT_TRUE(even);
  EXPECT_EQ(*even, cert({2, 1, Rational(1, 2), 0, -1}));
}

TEST(FamilyCertificate, ShapeMismatchesGiveNothing) {
  EXPECT_FALSE(family_certificate(CertificateFamily::DivisibleShort, 17, LevelSet::up_to(5)));
  EXPECT_FALSE(family_certificate(CertificateFamily::ResidueWide, 18, LevelSet::up_to(6)));
  EXPECT_FALSE(family_certificate(CertificateFamily::TwoThreeFour, 12, LevelSet{2, 3, 4}));
  EXPECT_FALSE(family_certificate(CertificateFamily::MissingPenultimate, 11, LevelSet{2, 3}));
  EXPECT_FALSE(family_certificate(CertificateFamily::ResidueWide, 17, LevelSet{2, 5}));
}

TEST(CheckCertificate, AgreesWithFullSystem) {
  for (int n = 4; n <= 22; ++n)
    for (int k = 2; k <= std::min(n, 7); ++k) {
      const LinearSystem sys = build_system(n, LevelSet::up_to(k));
      for (CertificateFamily family : kAllFamilies) {
        const auto y = family_certificate(family, n, LevelSet::up_to(k));
        if (!y) continue;
        const CertificateCheck full = verify_certificate(sys, *y);
        const CertificateTest fast = check_certificate(n, LevelSet::up_to(k), *y);
        EXPECT_EQ(full.valid, fast.valid) << n << " " << k << " " << family_name(family);
        EXPECT_EQ(full.objective, fast.objective);
      }
    }
}

TEST(CheckCertificate, ReportsMinimizingType) {
  const CertificateTest t = check_certificate(7, LevelSet::up_to(3), cert({0, 0, -1}));
  EXPECT_FALSE(t.valid);
  EXPECT_EQ(t.min_row, -2);
  ASSERT_TRUE(t.minimizing_type);
  EXPECT_EQ(*t.minimizing_type, TypeVector({1, 0, 2}));
  EXPECT_THROW(check_certificate(7, LevelSet::up_to(3), cert({1})), PreconditionError);
}

TEST(CheckCertificate, NoRowsMeansOnlyTheObjectiveMatters) {
  // 7 has no partition into parts of size 3.
  const CertificateTest t = check_certificate(7, LevelSet{3}, cert({0, 0, -1}));
  EXPECT_TRUE(t.valid);
  EXPECT_FALSE(t.minimizing_type);
}

TEST(ProvenRanges, EveryFamilyCertificateInRangeValidates) {
  for (int n = 2; n <= 40; ++n)
    for (int k = 2; k <= std::min(n, 9); ++k) {
      std::vector<LevelSet> candidates{LevelSet::up_to(k)};
      // A few non-prefix level sets with maximum k.
      for (int drop = 1; drop < k; ++drop) {
        std::vector<int> levels;
        for (int l = 1; l <= k; ++l)
          if (l != drop) levels.push_back(l);
        candidates.emplace_back(levels);
      }
      candidates.push_back(LevelSet{k});
      if (k > 2) candidates.push_back(LevelSet{k - 2, k});
      for (const LevelSet& levels : candidates)
        for (CertificateFamily family : kAllFamilies) {
          if (!family_in_proven_range(family, n, levels)) continue;
          const auto y = family_certificate(family, n, levels);
          EXPECT_TRUE(check_certificate(n, levels, *y).valid)
              << n << " {" << levels.to_string() << "} " << family_name(family);
        }
    }
}

TEST(Certificates, ComplementTheConstructions) {
  // Below n/2, exactly one of a construction and a certificate exists.
  for (int n = 5; n <= 64; ++n)
    for (int k = 2; 2 * k < n; ++k) {
      const bool constructive = plan_for(n, k).has_value();
      const bool refuted = make_certificate(n, LevelSet::up_to(k)).has_value();
      EXPECT_NE(constructive, refuted) << n << " " << k;
    }
}
