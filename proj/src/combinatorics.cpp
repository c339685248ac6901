#include <hyperfactor/combinatorics.hpp>
#include <hyperfactor/errors.hpp>

#include <algorithm>
#include <numeric>

namespace hyperfactor {

Integer binomial(long a, long b) {
  if (a < 0 || b < 0 || a < b) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned padic_valuation(unsigned long p, const Integer& m) {
  if (!is_prime(p))
    throw PreconditionError("padic_valuation: " + std::to_string(p) +
                            " is not prime");
  if (m < 1) throw PreconditionError("padic_valuation: m must be positive");
  Integer rest = m;
  unsigned e = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++e;
  }
  return e;
}

// ---------------------------------------------------------------- LevelSet

LevelSet::LevelSet(std::vector<int> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw PreconditionError("level set must not be empty");
  std::sort(levels_.begin(), levels_.end());
  levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
  if (levels_.front() < 1)
    throw PreconditionError("levels must be positive integers");
}

LevelSet::LevelSet(std::initializer_list<int> levels)
    : LevelSet(std::vector<int>(levels)) {}

LevelSet LevelSet::up_to(int k) {
  if (k <= 0) return none();
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  return LevelSet(std::move(v));
}

void LevelSet::validate_for(int n) const {
  if (levels_.empty()) throw PreconditionError("level set must not be empty");
  if (max() > n)
    throw PreconditionError("level " + std::to_string(max()) +
                            " exceeds ground set size " + std::to_string(n));
}

bool LevelSet::contains(int level) const {
  return std::binary_search(levels_.begin(), levels_.end(), level);
}

bool LevelSet::is_prefix() const {
  return !levels_.empty() && levels_.front() == 1 &&
         levels_.back() == static_cast<int>(levels_.size());
}

std::string LevelSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(levels_[i]);
  }
  return out;
}

// ------------------------------------------------------------------ Subset

Subset::Subset(std::initializer_list<int> elements) {
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSize)
      throw PreconditionError("subset element out of range: " +
                              std::to_string(e));
    mask_ |= std::uint64_t{1} << (e - 1);
  }
}

Subset Subset::full(int n) { return Subset(full_mask(n)); }

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::vector<Subset> subsets_of_size(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {Subset()};
  // Gosper's hack walks k-bit masks in increasing numeric (colex) order.
  std::uint64_t m = Subset::full_mask(k);
  const std::uint64_t limit_bit = n >= 64 ? 0 : std::uint64_t{1} << n;
  while (true) {
    out.emplace_back(m);
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    if (r == 0) break;  // carried out of bit 63
    m = (((r ^ m) >> 2) / c) | r;
    if (limit_bit != 0 && m >= limit_bit) break;
  }
  return out;
}

// -------------------------------------------------------------- TypeVector

TypeVector::TypeVector(std::vector<int> lambda) : lambda_(std::move(lambda)) {
  for (int v : lambda_) {
    if (v < 0) throw PreconditionError("type multiplicities must be >= 0");
    parts_ += v;
  }
}

TypeVector::TypeVector(std::initializer_list<int> lambda)
    : TypeVector(std::vector<int>(lambda)) {}

int TypeVector::weight() const {
  int w = 0;
  for (int i = 0; i < width(); ++i) w += (i + 1) * lambda_[i];
  return w;
}

bool TypeVector::supported_on(const LevelSet& levels) const {
  for (int i = 0; i < width(); ++i)
    if (lambda_[i] != 0 && !levels.contains(i + 1)) return false;
  return true;
}

std::string TypeVector::to_string() const {
  std::string out = "(";
  for (int i = 0; i < width(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda_[i]);
  }
  return out + ")";
}

bool CanonicalTypeOrder::operator()(const TypeVector& a,
                                    const TypeVector& b) const {
  const int w = std::max(a.width(), b.width());
  for (int level = w; level >= 1; --level) {
    if (a[level] != b[level]) return a[level] > b[level];
  }
  return false;
}

namespace {

void enumerate_rec(std::span<const int> desc_levels, std::size_t pos,
                   int remaining, std::vector<int>& lambda,
                   std::vector<TypeVector>& out) {
  if (pos == desc_levels.size()) {
    if (remaining == 0) out.emplace_back(lambda);
    return;
  }
  const int level = desc_levels[pos];
  if (pos + 1 == desc_levels.size()) {
    if (remaining % level == 0) {
      lambda[level - 1] = remaining / level;
      out.emplace_back(lambda);
      lambda[level - 1] = 0;
    }
    return;
  }
  for (int c = remaining / level; c >= 0; --c) {
    lambda[level - 1] = c;
    enumerate_rec(desc_levels, pos + 1, remaining - c * level, lambda, out);
  }
  lambda[level - 1] = 0;
}

}  // namespace

std::vector<TypeVector> enumerate_types(int n, const LevelSet& levels) {
  if (n < 1) throw PreconditionError("n must be positive");
  levels.validate_for(n);
  std::vector<int> desc(levels.begin(), levels.end());
  std::reverse(desc.begin(), desc.end());
  std::vector<int> lambda(static_cast<std::size_t>(levels.max()), 0);
  std::vector<TypeVector> out;
  // Choosing multiplicities from the largest level down, each from high to
  // low, emits rows directly in canonical order.
  enumerate_rec(desc, 0, n, lambda, out);
  return out;
}

Integer count_types(int n, const LevelSet& levels) {
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1, Integer(0));
  ways[0] = 1;
  for (int level : levels)
    for (int s = level; s <= n; ++s)
      ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - level)];
  return ways[static_cast<std::size_t>(n)];
}

Integer factor_count(int n, const LevelSet& levels) {
  Integer m = 0;
  for (int j : levels) m += binomial(n - 1, j - 1);
  return m;
}

Integer family_size(int n, const LevelSet& levels) {
  Integer m = 0;
  for (int j : levels) m += binomial(n, j);
  return m;
}

}  // namespace hyperfactor
