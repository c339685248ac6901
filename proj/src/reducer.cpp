#include <hyperfactor/errors.hpp>
#include <hyperfactor/reducer.hpp>
#include <hyperfactor/verifier.hpp>

#include <unordered_map>

namespace hyperfactor {

namespace {

void require_valid(const Factorization& fact, const std::string& what) {
  const VerificationReport report = verify_factorization(fact);
  if (!report.ok()) throw PreconditionError(what + ": " + report.summary());
}

void assert_valid(const Factorization& fact, const std::string& what) {
  const VerificationReport report = verify_factorization(fact);
  if (!report.ok()) throw InvariantViolation(what + ": " + report.summary());
}

void require_complement_range(int n, int k, const std::string& what) {
  if (2 * k < n || k > n - 1)
    throw PreconditionError(what + " needs n/2 <= k <= n-1, got n=" +
                            std::to_string(n) + " k=" + std::to_string(k));
}

Factor pair_factor(Subset s, int n) {
  Factor f{s, s.complement_in(n)};
  canonicalize_factor(f);
  return f;
}

}  // namespace

Factorization extend_by_complements(const Factorization& fact, int k) {
  const int n = fact.n;
  require_complement_range(n, k, "extend_by_complements");
  if (fact.levels != LevelSet::up_to(n - k - 1))
    throw PreconditionError("extend_by_complements: input levels must be 1.." +
                            std::to_string(n - k - 1));
  require_valid(fact, "extend_by_complements input");

  Factorization out = fact;
  out.levels = LevelSet::up_to(k);
  for (int size = n - k; 2 * size <= n; ++size)
    for (Subset s : subsets_of_size(n, size))
      if (2 * size < n || s.contains(1)) out.factors.push_back(pair_factor(s, n));
  assert_valid(out, "extend_by_complements output");
  return out;
}

RepairResult repair_to_complement_paired(const Factorization& fact,
                                         const RepairOptions& options) {
  const int n = fact.n;
  const int k = fact.levels.empty() ? 0 : fact.levels.max();
  require_complement_range(n, k, "repair_to_complement_paired");
  if (fact.levels != LevelSet::up_to(k))
    throw PreconditionError("repair_to_complement_paired: levels must be 1..k");
  require_valid(fact, "repair_to_complement_paired input");

  RepairResult result;
  result.repaired = fact;
  std::vector<Factor>& factors = result.repaired.factors;

  std::unordered_map<std::uint64_t, std::size_t> where;
  for (std::size_t f = 0; f < factors.size(); ++f)
    for (Subset s : factors[f]) where[s.mask()] = f;

  for (int size = k; 2 * size >= n; --size) {
    for (Subset s : subsets_of_size(n, size)) {
      const Subset comp = s.complement_in(n);
      const std::size_t home = where.at(s.mask());
      const std::size_t other = where.at(comp.mask());
      if (home == other) continue;  // the factor is already {S, complement}

      // factors[home] = {S, T_1..T_l} with the T's partitioning the
      // complement; factors[other] = {complement, pieces of S}.
      Factor ts;
      for (Subset t : factors[home])
        if (t != s) ts.push_back(t);
      Factor rebuilt;
      for (Subset u : factors[other])
        if (u != comp) rebuilt.push_back(u);
      for (Subset t : ts) {
        rebuilt.push_back(t);
        where[t.mask()] = other;
      }
      canonicalize_factor(rebuilt);
      factors[other] = std::move(rebuilt);
      factors[home] = pair_factor(s, n);
      where[comp.mask()] = home;
      ++result.swaps;

      if (options.validate_each_swap)
        assert_valid(result.repaired, "after swap at " + s.to_string());
    }
  }

  result.residue.n = n;
  result.residue.levels = LevelSet::up_to(n - k - 1);
  for (const Factor& f : factors) {
    bool paired = false;
    for (Subset s : f) paired = paired || s.size() >= n - k;
    if (!paired) result.residue.factors.push_back(f);
  }
  assert_valid(result.repaired, "repaired factorization");
  assert_valid(result.residue, "residue factorization");
  return result;
}

Factorization project_lift(const Factorization& fact) {
  const int lifted_n = fact.n;
  if (lifted_n < 2)
    throw PreconditionError("project_lift needs a ground set of size >= 2");
  std::vector<int> projected;
  int previous = -1;
  for (int level : fact.levels) {
    if (level == previous + 1)
      throw PreconditionError("project_lift: levels " + fact.levels.to_string() +
                              " contain consecutive values");
    previous = level;
    projected.push_back(level);
    if (level > 1) projected.push_back(level - 1);
  }

  Factorization out;
  out.n = lifted_n - 1;
  out.levels = LevelSet(std::move(projected));
  for (std::size_t f = 0; f < fact.factors.size(); ++f) {
    Factor reduced;
    bool found = false;
    for (Subset s : fact.factors[f]) {
      if (s.contains(lifted_n)) {
        if (found)
          throw PreconditionError("project_lift: factor " + std::to_string(f) +
                                  " contains element " + std::to_string(lifted_n) +
                                  " twice");
        found = true;
        s = s.without(lifted_n);
        if (s.size() == 0) continue;
      }
      reduced.push_back(s);
    }
    if (!found)
      throw PreconditionError("project_lift: factor " + std::to_string(f) +
                              " does not contain element " +
                              std::to_string(lifted_n));
    if (reduced.empty()) continue;
    canonicalize_factor(reduced);
    out.factors.push_back(std::move(reduced));
  }
  assert_valid(out, "project_lift output");
  return out;
}

}  // namespace hyperfactor
