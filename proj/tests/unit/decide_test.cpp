#include <hyperfactor/decide.hpp>
#include <hyperfactor/errors.hpp>
#include <hyperfactor/verifier.hpp>

#include <gtest/gtest.h>

using namespace hyperfactor;

namespace {

bool characterized(int n, int k) {
  if (n % k == 0) return n >= k * (k - 2);
  if (n % k == k - 1) return n >= k * ((k + 1) / 2 - 1) - 1;
  return false;
}

}  // namespace

TEST(Decide, EighteenSixNotFactorable) {
  const Verdict v = decide(18, 6);
  EXPECT_EQ(v.status, VerdictStatus::NotFactorable);
  const auto& w = std::get<CertificateWitness>(v.witness);
  EXPECT_EQ(w.certificate.y, (std::vector<Rational>{3, 3, 3, 1, -1, 0}));
  EXPECT_TRUE(verify_certificate(build_system(w.n, w.levels), w.certificate).valid);
}

TEST(Decide, MinusOneCongruence) {
  const Verdict v = decide(11, 3);
  EXPECT_EQ(v.status, VerdictStatus::Factorable);
  EXPECT_EQ(std::get<Construction>(v.witness).plan.branch, Branch::Minus1OddLift);
}

TEST(Decide, ComplementReduction) {
  const Verdict v = decide(8, 4);
  EXPECT_EQ(v.status, VerdictStatus::Factorable);
  EXPECT_NE(v.reason.find("(8, 3)"), std::string::npos) << v.reason;
}

TEST(Decide, TrivialEnds) {
  EXPECT_EQ(decide(1, 1).status, VerdictStatus::Factorable);
  EXPECT_EQ(decide(9, 1).status, VerdictStatus::Factorable);
  EXPECT_NE(decide(9, 1).reason.find("outside the characterized range"), std::string::npos);
  EXPECT_EQ(decide(9, 9).status, decide(9, 8).status);
  EXPECT_NE(decide(9, 9).reason.find("k = n"), std::string::npos);
}

TEST(Decide, RejectsOutOfRange) {
  EXPECT_THROW(decide(65, 2), PreconditionError);
  EXPECT_THROW(decide(5, 6), PreconditionError);
  EXPECT_THROW(decide(5, 0), PreconditionError);
}

TEST(Decide, MatchesCongruenceConditionsUpTo64) {
  for (int n = 3; n <= 64; ++n)
    for (int k = 2; 2 * k < n; ++k)
      EXPECT_EQ(decide(n, k).status == VerdictStatus::Factorable, characterized(n, k))
          << n << " " << k;
}

TEST(Decide, ReductionInvolution) {
  for (int n = 2; n <= 64; ++n)
    for (int k = (n + 1) / 2; k <= n - 1; ++k) {
      const int other = n - k - 1;
      const VerdictStatus expected =
          other == 0 ? VerdictStatus::Factorable : decide(n, other).status;
      EXPECT_EQ(decide(n, k).status, expected) << n << " " << k;
    }
}

TEST(Decide, NegativeVerdictsCarryValidCertificates) {
  for (int n = 2; n <= 40; ++n)
    for (int k = 1; k <= n; ++k) {
      const Verdict v = decide(n, k);
      if (v.status != VerdictStatus::NotFactorable) continue;
      const auto& w = std::get<CertificateWitness>(v.witness);
      EXPECT_TRUE(check_certificate(w.n, w.levels, w.certificate).valid) << n << " " << k;
    }
}

TEST(Decide, AgreesWithIntegerSearchUpTo14) {
  for (int n = 2; n <= 14; ++n)
    for (int k = 1; k <= n; ++k) {
      const bool searched = integer_search_small(build_system(n, LevelSet::up_to(k))).status ==
                            SearchResult::Status::Found;
      EXPECT_EQ(decide(n, k).status == VerdictStatus::Factorable, searched) << n << " " << k;
    }
}

TEST(Construct, SmallExamples) {
  const Factorization six = construct(6, 3);
  EXPECT_EQ(six.factors.size(), factor_count(6, LevelSet::up_to(3)));
  EXPECT_TRUE(verify_factorization(six).ok());

  EXPECT_EQ(construct(12, 3).factors.size(), 67u);
  EXPECT_THROW(construct(18, 6), PreconditionError);
}

TEST(Construct, EveryFactorableInstanceUpTo12) {
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) {
      if (decide(n, k).status != VerdictStatus::Factorable) continue;
      const Factorization f = construct(n, k);
      EXPECT_TRUE(verify_factorization(f).ok()) << n << " " << k;
      EXPECT_EQ(f.factors.size(), factor_count(n, LevelSet::up_to(k)));
    }
}

TEST(Construct, WholeSetIsItsOwnFactor) {
  const Factorization f = construct(5, 5);
  EXPECT_NE(std::find(f.factors.begin(), f.factors.end(), Factor{Subset::full(5)}),
            f.factors.end());
}

TEST(DecideGeneral, DivisiblePattern) {
  const Verdict v = decide_general(12, LevelSet{2, 4});
  EXPECT_EQ(v.status, VerdictStatus::Factorable);
  EXPECT_TRUE(std::holds_alternative<SolutionWitness>(v.witness));
  EXPECT_NE(v.reason.find("realized"), std::string::npos);
  EXPECT_TRUE(verify_factorization(construct(12, LevelSet{2, 4})).ok());
}

TEST(DecideGeneral, TwoThreeFourCertificate) {
  const Verdict v = decide_general(11, LevelSet{2, 3, 4});
  EXPECT_EQ(v.status, VerdictStatus::NotFactorable);
  const auto& w = std::get<CertificateWitness>(v.witness);
  EXPECT_EQ(w.certificate.y, (std::vector<Rational>{0, Rational(-1, 2), 2, -1}));
  EXPECT_TRUE(verify_certificate(build_system(11, LevelSet{2, 3, 4}), w.certificate).valid);
}

TEST(DecideGeneral, SearchFallback) {
  const Verdict v = decide_general(11, LevelSet{2, 3});
  EXPECT_EQ(v.status, VerdictStatus::Factorable);
  const auto& w = std::get<SolutionWitness>(v.witness);
  EXPECT_TRUE(verify_solution(build_system(11, LevelSet{2, 3}), w.solution).ok());
}

TEST(DecideGeneral, PrefixDelegatesToDecide) {
  EXPECT_EQ(decide_general(18, LevelSet::up_to(6)).reason, decide(18, 6).reason);
}

TEST(DecideGeneral, MissingPenultimateLevel) {
  const Verdict v = decide_general(23, LevelSet{1, 2, 4});
  EXPECT_EQ(v.status, VerdictStatus::NotFactorable);
  EXPECT_EQ(std::get<CertificateWitness>(v.witness).source, "missing-penultimate");
}

TEST(DecideGeneral, EveryVerdictUpTo12IsBackedByAWitness) {
  for (int n = 2; n <= 12; ++n)
    for (std::uint32_t mask = 1; mask < (1U << std::min(n, 6)); ++mask) {
      std::vector<int> levels;
      for (int l = 1; l <= 6; ++l)
        if (mask >> (l - 1) & 1U) levels.push_back(l);
      const LevelSet set(levels);
      if (set.max() > n) continue;
      const Verdict v = decide_general(n, set);
      const std::string where = std::to_string(n) + " {" + set.to_string() + "}";
      switch (v.status) {
        case VerdictStatus::Factorable:
          EXPECT_TRUE(verify_factorization(construct(n, set)).ok()) << where;
          break;
        case VerdictStatus::NotFactorable:
          if (const auto* w = std::get_if<CertificateWitness>(&v.witness))
            EXPECT_TRUE(check_certificate(w->n, w->levels, w->certificate).valid) << where;
          else
            EXPECT_TRUE(std::holds_alternative<ExhaustionRecord>(v.witness)) << where;
          break;
        default:
          ADD_FAILURE() << where << " undecided: " << v.reason;
      }
    }
}

TEST(DecideGeneral, UnknownBeyondLimits) {
  DecideOptions tiny;
  tiny.search.type_limit = 1;
  tiny.lp_type_limit = 1;
  const Verdict v = decide_general(41, LevelSet{2, 3, 6, 7}, tiny);
  EXPECT_EQ(v.status, VerdictStatus::Unknown);
}

TEST(StatusName, Stable) {
  EXPECT_EQ(status_name(VerdictStatus::RationallyFeasibleUnknownIntegral),
            "RATIONALLY_FEASIBLE_UNKNOWN_INTEGRAL");
}
