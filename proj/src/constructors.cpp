#include <hyperfactor/constructors.hpp>
#include <hyperfactor/errors.hpp>

#include <numeric>
#include <string>

namespace hyperfactor {

std::string_view branch_name(Branch branch) {
  switch (branch) {
    case Branch::DivGeneric: return "DIV_GENERIC";
    case Branch::DivEdge: return "DIV_EDGE";
    case Branch::Minus1EvenLift: return "MINUS1_EVEN_LIFT";
    case Branch::Minus1OddLift: return "MINUS1_ODD_LIFT";
    case Branch::Minus1OddAbc: return "MINUS1_ODD_ABC";
    case Branch::Minus1OddRst: return "MINUS1_ODD_RST";
    case Branch::GeneralLDiv: return "GENERAL_L_DIV";
    case Branch::ComplementReduction: return "COMPLEMENT_REDUCTION";
    case Branch::TrivialSmall: return "TRIVIAL_SMALL";
  }
  return "?";
}

namespace {

std::string nk(int n, int k) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

TypeVector make_type(int width,
                     std::initializer_list<std::pair<int, int>> parts) {
  std::vector<int> lambda(static_cast<std::size_t>(width), 0);
  for (auto [level, count] : parts) {
    if (level < 1 || level > width)
      throw InvariantViolation("type level " + std::to_string(level) +
                               " outside 1.." + std::to_string(width));
    lambda[static_cast<std::size_t>(level - 1)] += count;
  }
  return TypeVector(std::move(lambda));
}

Integer exact_div(const Integer& num, const Integer& den,
                  const std::string& what) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw InvariantViolation(what + ": " + num.get_str() +
                             " is not divisible by " + den.get_str());
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

/// For each i in `lower`: k/gcd(k,i) parts of size i plus top-level parts,
/// used C(N,i)/(k/gcd(k,i)) times. The remaining level-k budget is filled
/// with the pure top type. `x` may already hold types that contribute to
/// levels outside `lower`. Returns nullopt when a multiplicity or part
/// count would be negative.
std::optional<SolutionVector> divisible_pattern(int N, int k,
                                                const std::vector<int>& lower,
                                                SolutionVector x) {
  if (N % k != 0)
    throw InvariantViolation("divisible pattern needs k | N " + nk(N, k));
  const int top_parts = N / k;
  for (int i : lower) {
    const int g = std::gcd(k, i);
    const int lam_i = k / g;
    const int lam_k = top_parts - i / g;
    if (lam_k < 0) return std::nullopt;
    const Integer count =
        exact_div(binomial(N, i), lam_i, "multiplicity on level " +
                                             std::to_string(i) + " " + nk(N, k));
    x.add(make_type(k, {{i, lam_i}, {k, lam_k}}), count);
  }
  const Integer covered = x.coverage(k)[static_cast<std::size_t>(k - 1)];
  const Integer rest = binomial(N, k) - covered;
  if (sgn(rest) < 0) return std::nullopt;
  x.add(make_type(k, {{k, top_parts}}),
        exact_div(rest, top_parts, "top-level remainder " + nk(N, k)));
  return x;
}

void require_levels_exact(const SolutionVector& x, int n,
                          const LevelSet& levels, const std::string& what) {
  const std::vector<Integer> cov = x.coverage(levels.max());
  for (int level = 1; level <= levels.max(); ++level) {
    const Integer want = levels.contains(level) ? binomial(n, level) : 0;
    if (cov[static_cast<std::size_t>(level - 1)] != want)
      throw InvariantViolation(what + ": level " + std::to_string(level) +
                               " covered " +
                               cov[static_cast<std::size_t>(level - 1)].get_str() +
                               " times, expected " + want.get_str());
  }
  for (const auto& [type, count] : x) {
    if (sgn(count) < 0)
      throw InvariantViolation(what + ": negative multiplicity on " +
                               type.to_string());
    if (type.weight() != n)
      throw InvariantViolation(what + ": " + type.to_string() +
                               " is not a partition of " + std::to_string(n));
  }
}

std::vector<int> parity_levels_below(int k) {
  std::vector<int> out;
  for (int i = (k % 2 == 0) ? 2 : 1; i < k; i += 2) out.push_back(i);
  return out;
}

LevelSet lifted_levels_for(int k) {
  std::vector<int> levels = parity_levels_below(k);
  levels.push_back(k);
  return LevelSet(std::move(levels));
}

LevelSet projected_levels(const LevelSet& lifted) {
  std::vector<int> out;
  for (int level : lifted) {
    out.push_back(level);
    if (level > 1) out.push_back(level - 1);
  }
  return LevelSet(std::move(out));
}

}  // namespace

// ------------------------------------------------------------------ plans

std::optional<ConstructionPlan> plan_for(int n, int k) {
  if (k < 1 || k > n || n > kMaxGroundSize)
    throw PreconditionError("plan_for: need 1 <= k <= n <= 64, got " +
                            nk(n, k));
  ConstructionPlan plan;
  plan.n = n;
  plan.k = k;
  if (k == 1) {
    plan.branch = Branch::TrivialSmall;
    return plan;
  }
  if (2 * k >= n) {
    plan.branch = Branch::ComplementReduction;
    return plan;
  }
  const int r = n % k;
  plan.r = r;
  if (r == 0) {
    plan.j = n / k - 1;
    if (plan.j < k - 3) return std::nullopt;
    plan.branch = (n == k * k - 2 * k) ? Branch::DivEdge : Branch::DivGeneric;
    return plan;
  }
  if (r == k - 1) {
    plan.j = (n + 1) / k - 1;
    if (plan.j < (k + 1) / 2 - 2) return std::nullopt;
    if (k % 2 == 0) {
      plan.branch = Branch::Minus1EvenLift;
      plan.lifted_n = n + 1;
      plan.lifted_levels = lifted_levels_for(k);
      return plan;
    }
    const int base = (k * k - k - 2) / 2;
    if ((n - base) % k != 0 || n < base)
      throw InvariantViolation("odd-k offset is not a multiple of k " +
                               nk(n, k));
    plan.t = (n - base) / k;
    if (2 * plan.t >= k - 3) {
      plan.branch = Branch::Minus1OddLift;
      plan.lifted_n = n + 1;
      plan.lifted_levels = lifted_levels_for(k);
    } else if (2 * plan.t == k - 5) {
      plan.branch = Branch::Minus1OddAbc;
    } else {
      plan.branch = Branch::Minus1OddRst;
    }
    return plan;
  }
  return std::nullopt;
}

int Construction::n() const {
  return std::visit([](const auto& part) { return part.n; }, body);
}

LevelSet Construction::levels() const {
  struct Visitor {
    LevelSet operator()(const DirectPart& p) const { return p.levels; }
    LevelSet operator()(const LiftedPart& p) const {
      return projected_levels(p.lifted.levels);
    }
    LevelSet operator()(const UnionPart& p) const {
      std::vector<int> all;
      for (const Construction& c : p.parts)
        for (int level : c.levels()) all.push_back(level);
      return LevelSet(std::move(all));
    }
    LevelSet operator()(const ComplementPart& p) const {
      return LevelSet::up_to(p.k);
    }
  };
  return std::visit(Visitor{}, body);
}

// ---------------------------------------------------------- constructions

SolutionVector construct_div(int n, int k) {
  if (k < 1 || n <= 2 * k || n % k != 0 || n / k - 1 < k - 3)
    throw PreconditionError("construct_div needs n = jk + k, j >= k-3, n > 2k; got " +
                            nk(n, k));
  const bool edge = (n == k * k - 2 * k);
  std::vector<int> lower;
  for (int i = 1; i <= (edge ? k - 3 : k - 1); ++i) lower.push_back(i);
  SolutionVector seed;
  if (edge) seed.add(make_type(k, {{k - 2, 1}, {k - 1, k - 2}}), binomial(n, k - 2));
  std::optional<SolutionVector> x = divisible_pattern(n, k, lower, seed);
  if (!x) throw InvariantViolation("construct_div produced a negative entry " + nk(n, k));
  require_levels_exact(*x, n, LevelSet::up_to(k), "construct_div " + nk(n, k));
  return *std::move(x);
}

SolutionVector construct_lifted(int n, int k) {
  if (k < 2 || (n + 1) % k != 0)
    throw PreconditionError("construct_lifted needs k | n+1 " + nk(n, k));
  const LevelSet levels = lifted_levels_for(k);
  std::optional<SolutionVector> x =
      divisible_pattern(n + 1, k, parity_levels_below(k), {});
  if (!x)
    throw InvariantViolation("lifted construction produced a negative entry " +
                             nk(n, k));
  require_levels_exact(*x, n + 1, levels, "construct_lifted " + nk(n, k));
  return *std::move(x);
}

LevelSet upper_levels(int k, int t) {
  std::vector<int> levels;
  for (int level = (k + 2 * t + 1) / 2; level <= k; ++level)
    levels.push_back(level);
  return LevelSet(std::move(levels));
}

ThreeTypeSolution three_type_solution(int k) {
  if (k < 5 || k % 2 == 0)
    throw PreconditionError("three_type_solution needs odd k >= 5");
  ThreeTypeSolution s;
  s.k = k;
  s.n = k * k - 3 * k - 1;
  const Integer base = binomial(s.n, k - 2);
  s.a = exact_div(Integer(3 * (k - 3)) * base, Integer(2 * s.n), "a");
  s.b = exact_div(Integer(k - 5) * base, Integer(2 * s.n), "b");
  s.c = binomial(s.n, k - 1) - 2 * s.b;
  if (sgn(s.c) < 0) throw InvariantViolation("three-type solution: c < 0");
  require_levels_exact(to_solution(s), s.n, LevelSet{k - 2, k - 1, k},
                       "three_type_solution k=" + std::to_string(k));
  return s;
}

SolutionVector to_solution(const ThreeTypeSolution& s) {
  const int k = s.k;
  SolutionVector x;
  x.add(make_type(k, {{k - 2, (k + 1) / 2}, {k, (k - 5) / 2}}), s.a);
  if (sgn(s.b) != 0)
    x.add(make_type(k, {{k - 2, (k - 1) / 2}, {k - 1, 2}, {k, (k - 7) / 2}}), s.b);
  x.add(make_type(k, {{k - 1, 1}, {k, k - 4}}), s.c);
  return x;
}

TypeVector type_R(int k, int t) {
  return make_type(k, {{k - 1, 1}, {k, (k - 3) / 2 + t}});
}

TypeVector type_S(int k, int t, int i) {
  if (i == 0) return make_type(k, {{k - 2, (k + 1) / 2}, {k, t}});
  return make_type(k, {{k - 2 - i, 1}, {k - 2, (k - 1) / 2 - i}, {k - 1, i}, {k, t}});
}

TypeVector type_T(int k, int t, int i) {
  return make_type(k, {{k - 2 - i, 2}, {k - 2, (k - 3) / 2 - i}, {k, t + i}});
}

RstSolution rst_solution(int k, int t) {
  if (k < 7 || k % 2 == 0 || t < 0 || 2 * t > k - 7)
    throw PreconditionError("rst_solution needs odd k >= 7 and 0 <= t <= (k-7)/2");
  RstSolution s;
  s.k = k;
  s.t = t;
  s.n = (k * k - k - 2) / 2 + t * k;
  const int n = s.n;
  const int steps = s.s();
  const int lowest = (k + 1) / 2 + t;
  const int small = (k - 1) / 2 + t;  // parts in R

  s.x = 0;
  s.y = 0;
  for (int i = lowest; i <= k; ++i) {
    s.y += binomial(n, i) - small * binomial(n - 1, i - 1);
    s.x += (small + 1) * binomial(n - 1, i - 1) - binomial(n, i);
  }

  s.a.assign(static_cast<std::size_t>(steps + 1), Integer(0));
  s.b.assign(static_cast<std::size_t>(steps + 1), Integer(0));
  for (int i = 2; i <= steps; ++i) {
    const Integer level = binomial(n, k - 2 - i);
    s.b[i] = level / 2;
    s.a[i] = level - 2 * s.b[i];
  }

  Integer weighted = 2 * t * s.y;
  for (int i = 1; i <= steps; ++i) weighted += i * binomial(n, k - 2 - i);
  s.A = exact_div(weighted, Integer(k - 2 + 2 * t), "A");
  s.B = ((k - 3) / 2 + t) * s.A - t * s.y;

  s.a[1] = s.A;
  s.b[1] = s.B;
  for (int i = 2; i <= steps; ++i) {
    s.a[1] -= i * s.a[i];
    s.b[1] -= i * s.b[i];
  }
  s.a[0] = s.y;
  for (int i = 1; i <= steps; ++i) s.a[0] -= s.a[i] + s.b[i];

  auto nonneg = [&](const Integer& v, const std::string& name) {
    if (sgn(v) < 0)
      throw InvariantViolation("R/S/T solution k=" + std::to_string(k) +
                               " t=" + std::to_string(t) + ": " + name +
                               " = " + v.get_str() + " < 0");
  };
  nonneg(s.x, "x");
  nonneg(s.y, "y");
  for (int i = 0; i <= steps; ++i) nonneg(s.a[i], "a_" + std::to_string(i));
  for (int i = 1; i <= steps; ++i) nonneg(s.b[i], "b_" + std::to_string(i));

  require_levels_exact(to_solution(s), n, upper_levels(k, t),
                       "rst_solution k=" + std::to_string(k) +
                           " t=" + std::to_string(t));
  return s;
}

SolutionVector to_solution(const RstSolution& s) {
  SolutionVector x;
  x.add(type_R(s.k, s.t), s.x);
  x.add(type_S(s.k, s.t, 0), s.a[0]);
  for (int i = 1; i <= s.s(); ++i) {
    x.add(type_S(s.k, s.t, i), s.a[i]);
    x.add(type_T(s.k, s.t, i), s.b[i]);
  }
  return x;
}

Construction construct_minus1(int n, int k) {
  if (k < 2 || n <= 2 * k || (n + 1) % k != 0)
    throw PreconditionError("construct_minus1 needs n = jk + k - 1, n > 2k; got " +
                            nk(n, k));
  std::optional<ConstructionPlan> plan = plan_for(n, k);
  if (!plan)
    throw PreconditionError("construct_minus1 needs j >= ceil(k/2)-2 " + nk(n, k));

  Construction out;
  out.plan = *plan;
  switch (plan->branch) {
    case Branch::Minus1EvenLift:
    case Branch::Minus1OddLift:
      out.body = LiftedPart{n, DirectPart{n + 1, *plan->lifted_levels,
                                          construct_lifted(n, k)}};
      return out;
    case Branch::Minus1OddAbc:
    case Branch::Minus1OddRst: {
      const int t = plan->t;
      DirectPart upper{n, upper_levels(k, t), {}};
      upper.solution = plan->branch == Branch::Minus1OddAbc
                           ? to_solution(three_type_solution(k))
                           : to_solution(rst_solution(k, t));
      // Lower levels: n = k * k' - 1 with k' = (k+2t-1)/2 and k >= k'+3.
      const int lower_k = (k + 2 * t - 1) / 2;
      std::optional<Construction> lower = construct_for(n, lower_k);
      if (!lower)
        throw InvariantViolation("no construction for lower levels " +
                                 nk(n, lower_k));
      Construction upper_c;
      upper_c.plan = *plan;
      upper_c.body = std::move(upper);
      UnionPart joined{n, {}};
      joined.parts.push_back(*std::move(lower));
      joined.parts.push_back(std::move(upper_c));
      out.body = std::move(joined);
      return out;
    }
    default:
      throw PreconditionError("construct_minus1: (n, k) is not in a minus-one branch " +
                              nk(n, k));
  }
}

std::optional<Construction> construct_for(int n, int k) {
  std::optional<ConstructionPlan> plan = plan_for(n, k);
  if (!plan) return std::nullopt;
  Construction out;
  out.plan = *plan;
  switch (plan->branch) {
    case Branch::TrivialSmall: {
      SolutionVector x;
      x.add(TypeVector({n}), 1);
      out.body = DirectPart{n, LevelSet{1}, std::move(x)};
      return out;
    }
    case Branch::ComplementReduction: {
      ComplementPart part;
      part.n = n;
      part.k = k;
      part.whole_set = (k == n);
      const int paired_k = std::min(k, n - 1);
      const int inner_k = n - paired_k - 1;
      if (inner_k >= 1) {
        std::optional<Construction> inner = construct_for(n, inner_k);
        if (!inner) return std::nullopt;
        part.inner.push_back(*std::move(inner));
      }
      out.body = std::move(part);
      return out;
    }
    case Branch::DivGeneric:
    case Branch::DivEdge:
      out.body = DirectPart{n, LevelSet::up_to(k), construct_div(n, k)};
      return out;
    default:
      return construct_minus1(n, k);
  }
}

std::optional<SolutionVector> construct_general_L_div(int n,
                                                      const LevelSet& levels) {
  levels.validate_for(n);
  const int k = levels.max();
  if (n % k != 0)
    throw PreconditionError("construct_general_L_div needs k | n " + nk(n, k));
  std::vector<int> lower(levels.begin(), levels.end());
  lower.pop_back();
  std::optional<SolutionVector> x = divisible_pattern(n, k, lower, {});
  if (x) require_levels_exact(*x, n, levels, "construct_general_L_div " + nk(n, k));
  return x;
}

}  // namespace hyperfactor
