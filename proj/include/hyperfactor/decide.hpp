#pragma once

#include <hyperfactor/certificates.hpp>
#include <hyperfactor/constructors.hpp>
#include <hyperfactor/factorization.hpp>
#include <hyperfactor/flow.hpp>
#include <hyperfactor/linear_system.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace hyperfactor {

enum class VerdictStatus {
  Factorable,
  NotFactorable,
  RationallyFeasibleUnknownIntegral,
  Unknown,
};

std::string_view status_name(VerdictStatus status);

/// A Farkas vector together with the system it refers to. For reductions
/// the system may differ from the one that was asked about.
struct CertificateWitness {
  int n = 0;
  LevelSet levels;
  FarkasCertificate certificate;
  std::string source;  ///< family name or "lp"
};

/// A non-negative integer solution of the system for (n, L).
struct SolutionWitness {
  int n = 0;
  LevelSet levels;
  SolutionVector solution;
};

/// Exhaustive integer search found no solution for (n, L).
struct ExhaustionRecord {
  int n = 0;
  LevelSet levels;
  std::uint64_t nodes = 0;
};

using Witness = std::variant<std::monostate, Construction, CertificateWitness,
                             SolutionWitness, ExhaustionRecord>;

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  Witness witness;
  std::string reason;
};

struct DecideOptions {
  SearchOptions search;
  /// Above this many types the LP fallback is skipped (status UNKNOWN).
  std::size_t lp_type_limit = 5000;
  /// FACTORABLE verdicts from a bare solution are realized through the
  /// flow engine when M is at most this.
  std::uint64_t realize_factor_limit = 20'000;
};

/// Characterization of K_n^{<=k}, 1 <= k <= n <= 64.
Verdict decide(int n, int k);

/// General level sets: certificate families, the divisible construction,
/// bounded integer search, then the LP relaxation.
Verdict decide_general(int n, const LevelSet& levels,
                       const DecideOptions& options = {});

/// Runs a construction through the flow engine, lift projections and
/// complement extensions. The result has passed verify_factorization.
Factorization realize(const Construction& c, const FlowOptions& flow = {});

/// Factorization of K_n^{<=k}; PreconditionError when it does not exist.
Factorization construct(int n, int k, const FlowOptions& flow = {});

/// Factorization of binom([n], L); PreconditionError unless decide_general
/// proves it factorable.
Factorization construct(int n, const LevelSet& levels,
                        const FlowOptions& flow = {},
                        const DecideOptions& options = {});

}  // namespace hyperfactor
