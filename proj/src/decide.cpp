#include <hyperfactor/decide.hpp>
#include <hyperfactor/errors.hpp>
#include <hyperfactor/reducer.hpp>
#include <hyperfactor/verifier.hpp>

namespace hyperfactor {

std::string_view status_name(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Factorable: return "FACTORABLE";
    case VerdictStatus::NotFactorable: return "NOT_FACTORABLE";
    case VerdictStatus::RationallyFeasibleUnknownIntegral:
      return "RATIONALLY_FEASIBLE_UNKNOWN_INTEGRAL";
    case VerdictStatus::Unknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

std::string nk(int n, int k) {
  return "(" + std::to_string(n) + ", " + std::to_string(k) + ")";
}

std::string branch_reason(const ConstructionPlan& plan) {
  const std::string k = std::to_string(plan.k);
  switch (plan.branch) {
    case Branch::DivGeneric:
      return "n = 0 mod " + k + " and n >= k(k-2): divisible construction";
    case Branch::DivEdge:
      return "n = 0 mod " + k + " and n = k(k-2): divisible construction, edge case";
    case Branch::Minus1EvenLift:
      return "n = -1 mod " + k + ", k even: lift to n+1 on even levels";
    case Branch::Minus1OddLift:
      return "n = -1 mod " + k + ", k odd: lift to n+1 on odd levels";
    case Branch::Minus1OddAbc:
      return "n = -1 mod " + k + ", k odd: three-type upper levels plus recursion";
    case Branch::Minus1OddRst:
      return "n = -1 mod " + k + ", k odd: R/S/T upper levels plus recursion";
    default:
      return std::string(branch_name(plan.branch));
  }
}

CertificateWitness lp_certificate(int n, const LevelSet& levels) {
  const LpOutcome lp = lp_feasible(build_system(n, levels));
  if (lp.feasible)
    throw InvariantViolation("system " + std::to_string(n) + "/" + levels.to_string() +
                             " has no family certificate but is rationally feasible");
  return {n, levels, lp.certificate, "lp"};
}

Verdict decide_below_half(int n, int k) {
  Verdict v;
  if (std::optional<Construction> c = construct_for(n, k)) {
    v.status = VerdictStatus::Factorable;
    v.reason = branch_reason(c->plan);
    v.witness = *std::move(c);
    return v;
  }
  v.status = VerdictStatus::NotFactorable;
  const LevelSet levels = LevelSet::up_to(k);
  if (std::optional<TaggedCertificate> cert = make_certificate(n, levels)) {
    v.reason = "neither n = 0 nor n = -1 mod k with n large enough; certificate family " +
               std::string(family_name(cert->family));
    v.witness = CertificateWitness{n, levels, cert->certificate,
                                   std::string(family_name(cert->family))};
  } else {
    v.reason = "no construction applies; certificate from the LP relaxation";
    v.witness = lp_certificate(n, levels);
  }
  return v;
}

}  // namespace

Verdict decide(int n, int k) {
  if (n < 1 || n > kMaxGroundSize || k < 1 || k > n)
    throw PreconditionError("decide needs 1 <= k <= n <= 64, got " + nk(n, k));

  if (k == 1) {
    Verdict v;
    v.status = VerdictStatus::Factorable;
    v.reason = "k = 1: one factor of n singletons (outside the characterized range)";
    v.witness = *construct_for(n, k);
    return v;
  }

  if (2 * k >= n) {
    const int paired_k = std::min(k, n - 1);
    const int inner_k = n - paired_k - 1;
    std::string prefix;
    if (k == n)
      prefix = "k = n: [n] is a factor on its own, leaving k = n-1 "
               "(outside the characterized range); ";
    if (inner_k == 0) {
      Verdict v;
      v.status = VerdictStatus::Factorable;
      v.reason = prefix + "complement pairing of all sizes 1..n-1";
      v.witness = *construct_for(n, k);
      return v;
    }
    Verdict inner = decide(n, inner_k);
    Verdict v;
    v.status = inner.status;
    v.reason = prefix + "complement reduction to " + nk(n, inner_k) + ": " + inner.reason;
    if (inner.status == VerdictStatus::Factorable)
      v.witness = *construct_for(n, k);
    else
      v.witness = std::move(inner.witness);
    return v;
  }

  return decide_below_half(n, k);
}

Verdict decide_general(int n, const LevelSet& levels, const DecideOptions& options) {
  if (n < 1 || n > kMaxGroundSize)
    throw PreconditionError("decide_general needs 1 <= n <= 64");
  levels.validate_for(n);
  const int k = levels.max();
  if (levels.is_prefix()) return decide(n, k);

  Verdict v;
  if (std::optional<TaggedCertificate> cert = make_certificate(n, levels)) {
    v.status = VerdictStatus::NotFactorable;
    v.reason = "certificate family " + std::string(family_name(cert->family));
    v.witness = CertificateWitness{n, levels, cert->certificate,
                                   std::string(family_name(cert->family))};
    return v;
  }

  auto factorable_from = [&](SolutionVector x, std::string reason) {
    Verdict out;
    out.status = VerdictStatus::Factorable;
    const Integer m = factor_count(n, levels);
    if (m <= options.realize_factor_limit) {
      FlowOptions flow;
      flow.check_invariants = false;
      run(n, levels, x, flow);  // throws unless the factorization verifies
      reason += "; realized and verified";
    } else {
      reason += "; " + m.get_str() + " factors exceed the realization limit, "
                "solution verified only";
    }
    out.reason = std::move(reason);
    out.witness = SolutionWitness{n, levels, std::move(x)};
    return out;
  };

  if (n % k == 0) {
    if (std::optional<SolutionVector> x = construct_general_L_div(n, levels))
      return factorable_from(*std::move(x), "k | n: divisible two-level pattern");
  }

  std::optional<LinearSystem> sys;
  const Integer type_count = count_types(n, levels);
  const std::size_t build_limit = std::max(options.search.type_limit, options.lp_type_limit);
  std::size_t types = 0;
  if (type_count <= build_limit) {
    sys.emplace(n, levels);
    types = sys->types().size();
  }

  if (sys && types <= options.search.type_limit) {
    const SearchResult search = integer_search_small(*sys, options.search);
    if (search.status == SearchResult::Status::Found)
      return factorable_from(*search.solution, "integer solution found by search");
    if (search.status == SearchResult::Status::Exhausted) {
      v.status = VerdictStatus::NotFactorable;
      const LpOutcome lp = lp_feasible(*sys);
      if (!lp.feasible) {
        v.reason = "LP relaxation infeasible";
        v.witness = CertificateWitness{n, levels, lp.certificate, "lp"};
      } else {
        v.reason = "exhaustive integer search found no solution";
        v.witness = ExhaustionRecord{n, levels, search.nodes};
      }
      return v;
    }
  }

  if (sys && types <= options.lp_type_limit) {
    const LpOutcome lp = lp_feasible(*sys);
    if (!lp.feasible) {
      v.status = VerdictStatus::NotFactorable;
      v.reason = "LP relaxation infeasible";
      v.witness = CertificateWitness{n, levels, lp.certificate, "lp"};
    } else {
      v.status = VerdictStatus::RationallyFeasibleUnknownIntegral;
      v.reason = "LP relaxation feasible; integer search beyond limits (" +
                 std::to_string(types) + " types)";
    }
    return v;
  }

  v.status = VerdictStatus::Unknown;
  v.reason = "system too large for search and LP limits (" + type_count.get_str() +
             " types)";
  return v;
}

Factorization realize(const Construction& c, const FlowOptions& flow) {
  struct Visitor {
    const FlowOptions& flow;

    Factorization operator()(const DirectPart& p) const {
      return run(p.n, p.levels, p.solution, flow);
    }
    Factorization operator()(const LiftedPart& p) const {
      return project_lift(run(p.lifted.n, p.lifted.levels, p.lifted.solution, flow));
    }
    Factorization operator()(const UnionPart& p) const {
      Factorization out;
      out.n = p.n;
      std::vector<int> levels;
      for (const Construction& sub : p.parts) {
        Factorization f = realize(sub, flow);
        if (f.n != p.n) throw InvariantViolation("union part on a different ground set");
        levels.insert(levels.end(), f.levels.begin(), f.levels.end());
        for (Factor& factor : f.factors) out.factors.push_back(std::move(factor));
      }
      out.levels = LevelSet(std::move(levels));
      return out;
    }
    Factorization operator()(const ComplementPart& p) const {
      const int paired_k = std::min(p.k, p.n - 1);
      Factorization inner;
      if (!p.inner.empty()) {
        inner = realize(p.inner.front(), flow);
      } else {
        inner.n = p.n;
        inner.levels = LevelSet::none();
      }
      Factorization out = extend_by_complements(inner, paired_k);
      if (p.whole_set) {
        out.levels = LevelSet::up_to(p.n);
        out.factors.push_back(Factor{Subset::full(p.n)});
      }
      return out;
    }
  };
  Factorization out = std::visit(Visitor{flow}, c.body);
  const VerificationReport report = verify_factorization(out);
  if (!report.ok())
    throw InvariantViolation("construction " + std::string(branch_name(c.plan.branch)) +
                             " did not verify: " + report.summary());
  return out;
}

Factorization construct(int n, int k, const FlowOptions& flow) {
  const Verdict v = decide(n, k);
  if (v.status != VerdictStatus::Factorable)
    throw PreconditionError("K_" + std::to_string(n) + "^{<=" + std::to_string(k) +
                            "} is NOT_FACTORABLE: " + v.reason);
  return realize(std::get<Construction>(v.witness), flow);
}

Factorization construct(int n, const LevelSet& levels, const FlowOptions& flow,
                        const DecideOptions& options) {
  levels.validate_for(n);
  if (levels.is_prefix()) return construct(n, levels.max(), flow);
  DecideOptions quiet = options;
  quiet.realize_factor_limit = 0;  // realized below instead
  const Verdict v = decide_general(n, levels, quiet);
  if (v.status != VerdictStatus::Factorable)
    throw PreconditionError("binom([" + std::to_string(n) + "], {" + levels.to_string() +
                            "}) is " + std::string(status_name(v.status)) + ": " + v.reason);
  const SolutionWitness& w = std::get<SolutionWitness>(v.witness);
  return run(w.n, w.levels, w.solution, flow);
}

}  // namespace hyperfactor
