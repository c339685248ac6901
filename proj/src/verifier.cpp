#include <hyperfactor/errors.hpp>
#include <hyperfactor/verifier.hpp>

#include <map>
#include <unordered_map>

namespace hyperfactor {

bool VerificationReport::has(Violation::Kind kind) const {
  for (const Violation& v : violations)
    if (v.kind == kind) return true;
  return false;
}

std::string VerificationReport::summary(std::size_t max_items) const {
  if (ok()) return "OK";
  std::string out;
  for (std::size_t i = 0; i < violations.size() && i < max_items; ++i) {
    if (!out.empty()) out += "; ";
    out += violations[i].message;
  }
  const std::uint64_t rest =
      suppressed + (violations.size() > max_items ? violations.size() - max_items : 0);
  if (rest > 0) out += "; and " + std::to_string(rest) + " more";
  return out;
}

namespace {

class Reporter {
 public:
  Reporter(VerificationReport& report, std::size_t cap) : report_(report), cap_(cap) {}

  void add(Violation::Kind kind, std::string message) {
    if (per_kind_[kind]++ >= cap_) {
      ++report_.suppressed;
      return;
    }
    report_.violations.push_back({kind, std::move(message)});
  }

 private:
  VerificationReport& report_;
  std::size_t cap_;
  std::map<Violation::Kind, std::size_t> per_kind_;
};

}  // namespace

VerificationReport verify_factorization(const Factorization& fact,
                                        const VerifyOptions& options) {
  VerificationReport report;
  Reporter reporter(report, options.max_listed);
  const int n = fact.n;
  try {
    if (n < 1 || n > kMaxGroundSize)
      throw PreconditionError("n=" + std::to_string(n) + " outside [1, 64]");
    if (!fact.levels.empty()) fact.levels.validate_for(n);
  } catch (const PreconditionError& e) {
    reporter.add(Violation::Kind::GroundSet, e.what());
    return report;
  }

  const Integer family = family_size(n, fact.levels);
  if (family > options.max_sets)
    throw LimitExceeded("verify_factorization: " + family.get_str() +
                        " sets exceed the memory cap of " +
                        std::to_string(options.max_sets));

  const std::uint64_t ground = Subset::full_mask(n);
  std::unordered_map<std::uint64_t, std::uint32_t> seen;
  seen.reserve(family.get_ui());

  for (std::size_t f = 0; f < fact.factors.size(); ++f) {
    const std::string where = "factor " + std::to_string(f) + ": ";
    std::uint64_t covered = 0;
    bool overlap = false;
    for (Subset s : fact.factors[f]) {
      if ((s.mask() & ~ground) != 0) {
        reporter.add(Violation::Kind::NotPartition,
                     where + s.to_string() + " is not a subset of [n]");
        continue;
      }
      if (!fact.levels.contains(s.size()))
        reporter.add(Violation::Kind::SizeOutsideL,
                     where + s.to_string() + " has size " +
                         std::to_string(s.size()) + " outside L");
      if ((covered & s.mask()) != 0) overlap = true;
      covered |= s.mask();
      if (fact.levels.contains(s.size()) && ++seen[s.mask()] == 2)
        reporter.add(Violation::Kind::DuplicateSet,
                     s.to_string() + " appears more than once");
    }
    if (overlap)
      reporter.add(Violation::Kind::NotPartition, where + "sets are not disjoint");
    if (covered != ground)
      reporter.add(Violation::Kind::NotPartition,
                   where + "union is not [n], missing " +
                       Subset(ground & ~covered).to_string());
  }

  if (family != seen.size()) {
    // Some set of binom([n], L) never appeared; name them.
    for (int level : fact.levels)
      for (Subset s : subsets_of_size(n, level))
        if (!seen.contains(s.mask()))
          reporter.add(Violation::Kind::MissingSet, s.to_string() + " is missing");
  }

  const Integer m = factor_count(n, fact.levels);
  if (m != fact.factors.size())
    reporter.add(Violation::Kind::FactorCount,
                 std::to_string(fact.factors.size()) + " factors, expected " +
                     m.get_str());
  return report;
}

VerificationReport verify_solution(const LinearSystem& sys,
                                   const SolutionVector& x) {
  VerificationReport report;
  Reporter reporter(report, 1000);
  for (const auto& [type, count] : x) {
    if (sgn(count) < 0)
      reporter.add(Violation::Kind::Negative,
                   type.to_string() + " has multiplicity " + count.get_str());
    if (!sys.index_of(type))
      reporter.add(Violation::Kind::UnknownType,
                   type.to_string() + " is not an (n, L)-type");
  }
  if (!report.ok()) return report;
  const std::vector<Integer> residual = evaluate_solution(sys, x);
  for (int level = 1; level <= sys.k(); ++level) {
    const Integer& diff = residual[static_cast<std::size_t>(level - 1)];
    if (sgn(diff) != 0) {
      const Integer& want = sys.rhs()[static_cast<std::size_t>(level - 1)];
      reporter.add(Violation::Kind::Residual,
                   "level " + std::to_string(level) + " covered " +
                       Integer(want + diff).get_str() + " times, expected " +
                       want.get_str());
    }
  }
  return report;
}

}  // namespace hyperfactor
