#include <hyperfactor/certificates.hpp>
#include <hyperfactor/errors.hpp>

namespace hyperfactor {

std::string_view family_name(CertificateFamily family) {
  switch (family) {
    case CertificateFamily::ResidueWide: return "residue-wide";
    case CertificateFamily::ResidueTwo: return "residue-two";
    case CertificateFamily::DivisibleShort: return "divisible-short";
    case CertificateFamily::MinusOneShort: return "minus-one-short";
    case CertificateFamily::GeneralResidue: return "general-residue";
    case CertificateFamily::MissingPenultimate: return "missing-penultimate";
    case CertificateFamily::TwoThreeFour: return "two-three-four";
  }
  return "?";
}

namespace {

struct Shape {
  int k;
  int q;  // n / k
  int r;  // n % k
};

Shape shape_of(int n, const LevelSet& levels) {
  const int k = levels.max();
  return {k, n / k, n % k};
}

Rational half(long v) { return make_rational(v, 2); }

std::vector<Rational> zeros(int k) {
  return std::vector<Rational>(static_cast<std::size_t>(k), Rational(0));
}

// y indexed by level, 1-based.
Rational& at(std::vector<Rational>& y, int level) {
  return y[static_cast<std::size_t>(level - 1)];
}

}  // namespace

std::optional<FarkasCertificate> family_certificate(CertificateFamily family,
                                                    int n,
                                                    const LevelSet& levels) {
  levels.validate_for(n);
  const auto [k, q, r] = shape_of(n, levels);
  const bool prefix = levels.is_prefix();
  std::vector<Rational> y = zeros(k);

  switch (family) {
    case CertificateFamily::ResidueWide: {
      if (!prefix || k < 3 || r < 1 || r > k - 2 || q < 3) return std::nullopt;
      const int j = q;
      for (int s = 1; s < r; ++s) at(y, s) = half(j);
      at(y, r) = j;
      for (int s = r + 1; s < k; ++s) at(y, s) = half(j - 1);
      at(y, k) = -1;
      break;
    }
    case CertificateFamily::ResidueTwo: {
      if (!prefix || k < 3 || r < 1 || r > k - 2 || q != 2) return std::nullopt;
      for (int s = 1; s < r; ++s) at(y, s) = 1;
      at(y, r) = 2;
      const int mid = (r + k) / 2;
      if ((k - r) % 2 != 0) {
        for (int s = r + 1; s <= mid; ++s) at(y, s) = 1;
      } else {
        for (int s = r + 1; s < mid; ++s) at(y, s) = 1;
        at(y, mid) = half(1);
      }
      at(y, k) = -1;
      break;
    }
    case CertificateFamily::DivisibleShort: {
      if (!prefix || r != 0) return std::nullopt;
      const int j = q - 1;
      if (j < 1 || j > k - 4) return std::nullopt;
      for (int s = 1; s <= j + 1; ++s) at(y, s) = j + 1;
      for (int s = j + 2; s <= k - 2; ++s) at(y, s) = half(j);
      at(y, k - 1) = -1;
      at(y, k) = 0;
      break;
    }
    case CertificateFamily::MinusOneShort: {
      if (!prefix || k < 2 || r != k - 1) return std::nullopt;
      const int j = q;  // n = jk + k - 1
      if (j < 1 || j > (k + 1) / 2 - 3) return std::nullopt;
      for (int s = 1; s <= 2 * j + 1; ++s) at(y, s) = j + 1;
      for (int s = 2 * j + 2; s <= k - 3; ++s) at(y, s) = half(j);
      at(y, k - 2) = -1;
      at(y, k - 1) = j;
      at(y, k) = -1;
      break;
    }
    case CertificateFamily::GeneralResidue: {
      if (r < 1 || r > k - 2 || q < 1) return std::nullopt;
      for (int level = 1; level < k; ++level) at(y, level) = half(q);
      at(y, r) = q;
      at(y, k) = -1;
      break;
    }
    case CertificateFamily::MissingPenultimate: {
      if (k < 2 || r != k - 1 || levels.contains(k - 1) || q < 1)
        return std::nullopt;
      for (int level : levels) at(y, level) = half(q);
      at(y, k) = -1;
      break;
    }
    case CertificateFamily::TwoThreeFour: {
      if (levels != LevelSet{2, 3, 4} || n % 4 != 3) return std::nullopt;
      const int j = (n + 1) / 4;
      at(y, 2) = make_rational(-1, 2);
      at(y, 3) = j - 1;
      at(y, 4) = -1;
      break;
    }
  }
  return FarkasCertificate{std::move(y)};
}

bool family_in_proven_range(CertificateFamily family, int n,
                            const LevelSet& levels) {
  if (!family_certificate(family, n, levels)) return false;
  const auto [k, q, r] = shape_of(n, levels);
  switch (family) {
    case CertificateFamily::ResidueWide:
    case CertificateFamily::ResidueTwo:
    case CertificateFamily::DivisibleShort:
    case CertificateFamily::MinusOneShort:
      return n > 2 * k;
    case CertificateFamily::GeneralResidue:
      return q >= 5;
    case CertificateFamily::MissingPenultimate:
      return q >= 2;
    case CertificateFamily::TwoThreeFour:
      return n >= 7;
  }
  return false;
}

CertificateTest check_certificate(int n, const LevelSet& levels,
                                  const FarkasCertificate& cert) {
  levels.validate_for(n);
  const int k = levels.max();
  if (cert.y.size() != static_cast<std::size_t>(k))
    throw PreconditionError("certificate has " + std::to_string(cert.y.size()) +
                            " entries, expected " + std::to_string(k));

  // best[s]: minimum of lambda . y over partitions of s with parts in L.
  std::vector<std::optional<Rational>> best(static_cast<std::size_t>(n + 1));
  std::vector<int> last(static_cast<std::size_t>(n + 1), 0);
  best[0] = Rational(0);
  for (int s = 1; s <= n; ++s) {
    for (int level : levels) {
      if (level > s || !best[static_cast<std::size_t>(s - level)]) continue;
      Rational cand = *best[static_cast<std::size_t>(s - level)] +
                      cert.y[static_cast<std::size_t>(level - 1)];
      auto& slot = best[static_cast<std::size_t>(s)];
      if (!slot || cand < *slot) {
        slot = cand;
        last[static_cast<std::size_t>(s)] = level;
      }
    }
  }

  CertificateTest out;
  out.objective = 0;
  for (int level : levels)
    out.objective += binomial(n, level) * cert.y[static_cast<std::size_t>(level - 1)];

  const bool has_rows = best[static_cast<std::size_t>(n)].has_value();
  if (has_rows) {
    out.min_row = *best[static_cast<std::size_t>(n)];
    std::vector<int> lambda(static_cast<std::size_t>(k), 0);
    for (int s = n; s > 0; s -= last[static_cast<std::size_t>(s)])
      ++lambda[static_cast<std::size_t>(last[static_cast<std::size_t>(s)] - 1)];
    out.minimizing_type = TypeVector(std::move(lambda));
  }
  out.valid = (!has_rows || sgn(out.min_row) >= 0) && sgn(out.objective) < 0;
  return out;
}

std::optional<TaggedCertificate> make_certificate(int n,
                                                  const LevelSet& levels) {
  levels.validate_for(n);
  for (CertificateFamily family : kAllFamilies) {
    std::optional<FarkasCertificate> cert = family_certificate(family, n, levels);
    if (cert && check_certificate(n, levels, *cert).valid)
      return TaggedCertificate{family, *std::move(cert)};
  }
  return std::nullopt;
}

}  // namespace hyperfactor
