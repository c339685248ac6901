#pragma once

#include <hyperfactor/constructors.hpp>
#include <hyperfactor/factorization.hpp>
#include <hyperfactor/linear_system.hpp>

#include <iosfwd>
#include <string>

namespace hyperfactor {

/// "HYPERFACTOR v1" text format: a header, `n=<N> levels=<l1,...>`, then
/// one line per factor with sets `{e1,e2}` joined by " | ", sets ordered by
/// minimum element. LF line endings, trailing newline.
void write_factorization(std::ostream& out, const Factorization& fact);
std::string format_factorization(const Factorization& fact);
/// Throws ParseError on malformed input. Does not verify the factorization.
Factorization read_factorization(std::istream& in);

struct CertificateFile {
  int n = 0;
  LevelSet levels;
  FarkasCertificate certificate;
};

/// "FARKAS v1" format: header, `n=<N> levels=...`, then the k entries of y
/// as exact rationals ("p" or "p/q") separated by single spaces.
void write_certificate(std::ostream& out, const CertificateFile& file);
CertificateFile read_certificate(std::istream& in);

/// `p` or `p/q` in lowest terms.
std::string format_rational(const Rational& value);
/// Space-separated entries of y.
std::string format_certificate(const FarkasCertificate& cert);

/// One `type: multiplicity` line per entry, canonical order.
void write_solution(std::ostream& out, const SolutionVector& x);

/// The solution-level view of a construction: `#` header lines naming the
/// branch and any lift or union structure, followed by the solutions.
void write_construction(std::ostream& out, const Construction& c);

}  // namespace hyperfactor
