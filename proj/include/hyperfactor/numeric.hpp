#pragma once

#include <gmpxx.h>

#include <string>

namespace hyperfactor {

/// Exact unbounded integer. Every count in the library (binomials,
/// multiplicities, residuals) uses this type.
using Integer = mpz_class;

/// Exact rational with unbounded numerator and denominator, always kept
/// in canonical form.
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace hyperfactor
