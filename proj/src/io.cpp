#include <hyperfactor/errors.hpp>
#include <hyperfactor/io.hpp>

#include <istream>
#include <ostream>
#include <sstream>

namespace hyperfactor {

namespace {

constexpr std::string_view kFactorHeader = "HYPERFACTOR v1";
constexpr std::string_view kCertificateHeader = "FARKAS v1";

std::string read_line(std::istream& in, const std::string& what) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("unexpected end of input, expected " + what);
  if (!line.empty() && line.back() == '\r')
    throw ParseError("CR line endings are not accepted");
  return line;
}

int parse_int(std::string_view text, const std::string& what) {
  if (text.empty()) throw ParseError("empty " + what);
  int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("bad " + what + ": '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
    if (value > 1'000'000) throw ParseError(what + " out of range");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text, const std::string& what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string levels_text(const LevelSet& levels) { return levels.to_string(); }

/// Parses `n=<N> levels=<list>`.
std::pair<int, LevelSet> parse_params(const std::string& line) {
  constexpr std::string_view n_key = "n=";
  constexpr std::string_view l_key = " levels=";
  if (!line.starts_with(n_key)) throw ParseError("expected 'n=' on line 2");
  const std::size_t sep = line.find(l_key);
  if (sep == std::string::npos) throw ParseError("expected ' levels=' on line 2");
  const int n = parse_int(std::string_view(line).substr(n_key.size(), sep - n_key.size()), "n");
  const std::string_view list = std::string_view(line).substr(sep + l_key.size());
  std::vector<int> values = list.empty() ? std::vector<int>{} : parse_int_list(list, "level");
  for (int v : values)
    if (v < 1) throw ParseError("levels must be positive");
  LevelSet levels = values.empty() ? LevelSet::none() : LevelSet(values);
  if (levels.size() != values.size()) throw ParseError("repeated level");
  try {
    if (n < 1 || n > kMaxGroundSize) throw PreconditionError("n outside [1, 64]");
    if (!levels.empty()) levels.validate_for(n);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid parameters: ") + e.what());
  }
  return {n, std::move(levels)};
}

Subset parse_set(std::string_view text, int n) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ParseError("bad set '" + std::string(text) + "'");
  const std::string_view inner = text.substr(1, text.size() - 2);
  Subset s;
  if (inner.empty()) return s;
  int previous = 0;
  for (int e : parse_int_list(inner, "element")) {
    if (e < 1 || e > n) throw ParseError("element " + std::to_string(e) + " outside [n]");
    if (e <= previous) throw ParseError("set elements must be strictly ascending");
    previous = e;
    s = s.with(e);
  }
  return s;
}

}  // namespace

void write_factorization(std::ostream& out, const Factorization& fact) {
  out << kFactorHeader << '\n';
  out << "n=" << fact.n << " levels=" << levels_text(fact.levels) << '\n';
  for (const Factor& factor : fact.factors) {
    Factor sorted = factor;
    canonicalize_factor(sorted);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0) out << " | ";
      out << sorted[i].to_string();
    }
    out << '\n';
  }
}

std::string format_factorization(const Factorization& fact) {
  std::ostringstream out;
  write_factorization(out, fact);
  return out.str();
}

Factorization read_factorization(std::istream& in) {
  if (read_line(in, "header") != kFactorHeader)
    throw ParseError("missing '" + std::string(kFactorHeader) + "' header");
  Factorization fact;
  std::tie(fact.n, fact.levels) = parse_params(read_line(in, "parameters"));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      throw ParseError("CR line endings are not accepted");
    if (line.empty()) throw ParseError("empty factor line");
    Factor factor;
    std::size_t start = 0;
    while (true) {
      const std::size_t bar = line.find(" | ", start);
      factor.push_back(parse_set(std::string_view(line).substr(start, bar - start), fact.n));
      if (bar == std::string::npos) break;
      start = bar + 3;
    }
    fact.factors.push_back(std::move(factor));
  }
  return fact;
}

std::string format_rational(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

std::string format_certificate(const FarkasCertificate& cert) {
  std::string out;
  for (std::size_t i = 0; i < cert.y.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_rational(cert.y[i]);
  }
  return out;
}

void write_certificate(std::ostream& out, const CertificateFile& file) {
  out << kCertificateHeader << '\n';
  out << "n=" << file.n << " levels=" << levels_text(file.levels) << '\n';
  out << format_certificate(file.certificate) << '\n';
}

CertificateFile read_certificate(std::istream& in) {
  if (read_line(in, "header") != kCertificateHeader)
    throw ParseError("missing '" + std::string(kCertificateHeader) + "' header");
  CertificateFile file;
  std::tie(file.n, file.levels) = parse_params(read_line(in, "parameters"));
  if (file.levels.empty()) throw ParseError("certificate needs a non-empty level set");
  const std::string line = read_line(in, "certificate entries");
  std::istringstream entries(line);
  std::string token;
  while (entries >> token) {
    Rational value;
    if (value.set_str(token, 10) != 0 || sgn(value.get_den()) == 0)
      throw ParseError("bad rational '" + token + "'");
    value.canonicalize();
    file.certificate.y.push_back(value);
  }
  if (file.certificate.y.size() != static_cast<std::size_t>(file.levels.max()))
    throw ParseError("expected " + std::to_string(file.levels.max()) +
                     " entries, got " + std::to_string(file.certificate.y.size()));
  std::string rest;
  if (std::getline(in, rest) && !rest.empty()) throw ParseError("trailing content");
  return file;
}

void write_solution(std::ostream& out, const SolutionVector& x) {
  for (const auto& [type, count] : x) out << type.to_string() << ": " << count.get_str() << '\n';
}

void write_construction(std::ostream& out, const Construction& c) {
  out << "# branch " << branch_name(c.plan.branch) << " n=" << c.n()
      << " levels=" << c.levels().to_string() << '\n';
  std::visit(
      [&](const auto& part) {
        using T = std::decay_t<decltype(part)>;
        if constexpr (std::is_same_v<T, DirectPart>) {
          write_solution(out, part.solution);
        } else if constexpr (std::is_same_v<T, LiftedPart>) {
          out << "# lifted to n=" << part.lifted.n
              << " levels=" << part.lifted.levels.to_string()
              << ", element " << part.lifted.n << " deleted afterwards\n";
          write_solution(out, part.lifted.solution);
        } else if constexpr (std::is_same_v<T, UnionPart>) {
          for (const Construction& sub : part.parts) write_construction(out, sub);
        } else {
          out << "# complement pairs on sizes " << (part.n - std::min(part.k, part.n - 1))
              << ".." << std::min(part.k, part.n - 1)
              << (part.whole_set ? ", plus [n] as its own factor" : "") << '\n';
          for (const Construction& sub : part.inner) write_construction(out, sub);
        }
      },
      c.body);
}

}  // namespace hyperfactor
