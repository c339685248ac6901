#include <hyperfactor/errors.hpp>
#include <hyperfactor/linear_system.hpp>
#include <hyperfactor/simplex.hpp>

#include <algorithm>

namespace hyperfactor {

// ---------------------------------------------------------- SolutionVector

void SolutionVector::add(const TypeVector& type, const Integer& count) {
  if (sgn(count) == 0) return;
  auto [it, inserted] = entries_.try_emplace(type, count);
  if (!inserted) {
    it->second += count;
    if (sgn(it->second) == 0) entries_.erase(it);
  }
}

void SolutionVector::set(const TypeVector& type, const Integer& count) {
  if (sgn(count) == 0) {
    entries_.erase(type);
  } else {
    entries_[type] = count;
  }
}

Integer SolutionVector::at(const TypeVector& type) const {
  auto it = entries_.find(type);
  return it == entries_.end() ? Integer(0) : it->second;
}

Integer SolutionVector::total() const {
  Integer sum = 0;
  for (const auto& [type, count] : entries_) sum += count;
  return sum;
}

std::vector<Integer> SolutionVector::coverage(int width) const {
  std::vector<Integer> cov(static_cast<std::size_t>(width), Integer(0));
  for (const auto& [type, count] : entries_) {
    for (int level = 1; level <= type.width(); ++level) {
      if (type[level] == 0) continue;
      if (level > width)
        throw PreconditionError("type " + type.to_string() +
                                " is wider than " + std::to_string(width));
      cov[static_cast<std::size_t>(level - 1)] += count * type[level];
    }
  }
  return cov;
}

// ------------------------------------------------------------ LinearSystem

LinearSystem::LinearSystem(int n, LevelSet levels)
    : n_(n), levels_(std::move(levels)) {
  if (n < 1 || n > kMaxGroundSize)
    throw PreconditionError("n must lie in [1, " +
                            std::to_string(kMaxGroundSize) + "], got " +
                            std::to_string(n));
  levels_.validate_for(n);
  types_ = enumerate_types(n, levels_);
  rhs_.assign(static_cast<std::size_t>(k()), Integer(0));
  for (int level : levels_) rhs_[static_cast<std::size_t>(level - 1)] =
      binomial(n, level);
  for (std::size_t i = 0; i < types_.size(); ++i) index_.emplace(types_[i], i);
}

std::optional<std::size_t> LinearSystem::index_of(
    const TypeVector& type) const {
  auto it = index_.find(type);
  if (it == index_.end() || type.width() != k()) return std::nullopt;
  return it->second;
}

LinearSystem build_system(int n, const LevelSet& levels) {
  return LinearSystem(n, levels);
}

std::vector<Integer> evaluate_solution(const LinearSystem& sys,
                                       const SolutionVector& x) {
  for (const auto& [type, count] : x) {
    if (!sys.index_of(type))
      throw PreconditionError("type " + type.to_string() +
                              " is not a row of the system for n=" +
                              std::to_string(sys.n()) + " levels=" +
                              sys.levels().to_string());
  }
  std::vector<Integer> residual = x.coverage(sys.k());
  for (std::size_t i = 0; i < residual.size(); ++i)
    residual[i] -= sys.rhs()[i];
  return residual;
}

CertificateCheck verify_certificate(const LinearSystem& sys,
                                    const FarkasCertificate& cert) {
  if (cert.y.size() != static_cast<std::size_t>(sys.k()))
    throw PreconditionError("certificate has " + std::to_string(cert.y.size()) +
                            " entries, system has k=" +
                            std::to_string(sys.k()));
  CertificateCheck check;
  for (std::size_t r = 0; r < sys.types().size(); ++r) {
    const TypeVector& type = sys.types()[r];
    Rational value = 0;
    for (int level = 1; level <= sys.k(); ++level) {
      if (type[level] != 0) value += cert.y[level - 1] * type[level];
    }
    if (sgn(value) < 0) {
      check.violating_row = r;
      check.row_value = value;
      break;
    }
  }
  for (int level = 1; level <= sys.k(); ++level)
    check.objective += cert.y[level - 1] * sys.rhs()[level - 1];
  check.valid = !check.violating_row && sgn(check.objective) < 0;
  return check;
}

FarkasCertificate normalize_certificate(const FarkasCertificate& cert) {
  Integer den_lcm = 1;
  for (const Rational& v : cert.y) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            v.get_den_mpz_t());
  }
  Integer num_gcd = 0;
  for (const Rational& v : cert.y) {
    Integer scaled = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (sgn(num_gcd) == 0) return cert;
  FarkasCertificate out;
  out.y.reserve(cert.y.size());
  for (const Rational& v : cert.y) {
    Integer scaled = v.get_num() * (den_lcm / v.get_den());
    out.y.emplace_back(Integer(scaled / num_gcd));
  }
  return out;
}

namespace {

/// Equation rows are the levels of L; off-L levels are identically zero.
std::vector<int> live_levels(const LinearSystem& sys) {
  return {sys.levels().begin(), sys.levels().end()};
}

std::vector<Integer> column_of(const TypeVector& type,
                               const std::vector<int>& rows) {
  std::vector<Integer> col;
  col.reserve(rows.size());
  for (int level : rows) col.emplace_back(type[level]);
  return col;
}

}  // namespace

LpOutcome lp_feasible(const LinearSystem& sys) {
  const std::vector<int> rows = live_levels(sys);
  std::vector<std::vector<Integer>> columns;
  columns.reserve(sys.types().size());
  for (const TypeVector& type : sys.types())
    columns.push_back(column_of(type, rows));
  std::vector<Integer> rhs;
  for (int level : rows) rhs.push_back(sys.rhs()[level - 1]);

  detail::PhaseOneResult p1 = detail::phase_one(columns, rhs);
  LpOutcome out;
  out.feasible = p1.feasible;
  if (p1.feasible) {
    out.x = std::move(p1.x);
    return out;
  }
  FarkasCertificate raw;
  raw.y.assign(static_cast<std::size_t>(sys.k()), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    raw.y[rows[i] - 1] = -p1.dual[i];
  out.certificate = normalize_certificate(raw);
  if (!verify_certificate(sys, out.certificate).valid)
    throw InvariantViolation("simplex dual failed certificate verification");
  return out;
}

namespace {

class IntegerSearch {
 public:
  IntegerSearch(const LinearSystem& sys, const SearchOptions& options)
      : sys_(sys), options_(options), rows_(live_levels(sys)) {
    const std::size_t m = sys.types().size();
    for (const TypeVector& type : sys.types())
      columns_.push_back(column_of(type, rows_));
    // support_[i][r]: some type at index >= i has a part on row r.
    support_.assign(m + 1, std::vector<bool>(rows_.size(), false));
    for (std::size_t i = m; i-- > 0;) {
      support_[i] = support_[i + 1];
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (sgn(columns_[i][r]) != 0) support_[i][r] = true;
    }
    chosen_.assign(m, Integer(0));
  }

  SearchResult run() {
    std::vector<Integer> residual;
    for (int level : rows_) residual.push_back(sys_.rhs()[level - 1]);
    SearchResult result;
    try {
      if (dfs(0, residual)) {
        result.status = SearchResult::Status::Found;
        result.solution = std::move(found_);
      } else {
        result.status = SearchResult::Status::Exhausted;
      }
    } catch (const Abandon&) {
      result.status = SearchResult::Status::Abandoned;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  struct Abandon {};

  bool dfs(std::size_t idx, const std::vector<Integer>& residual) {
    if (++nodes_ > options_.node_limit) throw Abandon{};
    bool done = true;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (sgn(residual[r]) != 0) {
        done = false;
        if (!support_[idx][r]) return false;
      }
    }
    if (done) {
      record(idx, {});
      return true;
    }
    const std::size_t m = columns_.size();
    if (idx == m) return false;

    if (options_.relaxation_pruning) {
      std::vector<std::vector<Integer>> tail(columns_.begin() +
                                                 static_cast<long>(idx),
                                             columns_.end());
      detail::PhaseOneResult lp = detail::phase_one(tail, residual);
      if (!lp.feasible) return false;
      if (std::all_of(lp.x.begin(), lp.x.end(), [](const Rational& v) {
            return v.get_den() == 1;
          })) {
        record(idx, lp.x);
        return true;
      }
    }

    const std::vector<Integer>& col = columns_[idx];
    Integer max_count;
    bool bounded = false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (sgn(col[r]) == 0) continue;
      Integer cap = residual[r] / col[r];
      if (!bounded || cap < max_count) max_count = cap;
      bounded = true;
    }
    if (!bounded) return false;  // a type always has some part

    std::vector<Integer> next(rows_.size());
    for (Integer c = max_count; c >= 0; --c) {
      for (std::size_t r = 0; r < rows_.size(); ++r)
        next[r] = residual[r] - c * col[r];
      chosen_[idx] = c;
      if (dfs(idx + 1, next)) return true;
    }
    chosen_[idx] = 0;
    return false;
  }

  void record(std::size_t idx, const std::vector<Rational>& tail) {
    SolutionVector x;
    for (std::size_t i = 0; i < idx; ++i) x.add(sys_.types()[i], chosen_[i]);
    for (std::size_t i = 0; i < tail.size(); ++i)
      x.add(sys_.types()[idx + i], tail[i].get_num());
    found_ = std::move(x);
  }

  const LinearSystem& sys_;
  const SearchOptions& options_;
  std::vector<int> rows_;
  std::vector<std::vector<Integer>> columns_;
  std::vector<std::vector<bool>> support_;
  std::vector<Integer> chosen_;
  SolutionVector found_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult integer_search_small(const LinearSystem& sys,
                                  const SearchOptions& options) {
  if (sys.types().size() > options.type_limit)
    throw LimitExceeded("integer search: " +
                        std::to_string(sys.types().size()) +
                        " types exceed the limit of " +
                        std::to_string(options.type_limit));
  return IntegerSearch(sys, options).run();
}

}  // namespace hyperfactor
