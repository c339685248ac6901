// Command-line front end: decide, construct, solve, certificate, verify,
// types. Exit codes: 0 FACTORABLE/OK, 1 NOT_FACTORABLE or failed
// verification, 2 usage or internal error, 3 UNKNOWN.

#include <hyperfactor/certificates.hpp>
#include <hyperfactor/decide.hpp>
#include <hyperfactor/errors.hpp>
#include <hyperfactor/io.hpp>
#include <hyperfactor/verifier.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hf = hyperfactor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitUnknown = 3;

struct Instance {
  int n = 0;
  int k = 0;
  std::vector<int> levels;

  [[nodiscard]] hf::LevelSet level_set() const {
    return levels.empty() ? hf::LevelSet::up_to(k) : hf::LevelSet(levels);
  }
};

void add_instance_options(CLI::App* cmd, Instance& inst, bool allow_levels = true) {
  cmd->add_option("--n", inst.n, "ground set size (1..64)")->required();
  auto* k = cmd->add_option("--k", inst.k, "largest level; L = {1..k}");
  if (allow_levels) {
    auto* l = cmd->add_option("--levels", inst.levels, "level set, e.g. 2,4")
                  ->delimiter(',');
    k->excludes(l);
    l->excludes(k);
  } else {
    k->required();
  }
}

void require_instance(const Instance& inst) {
  if (inst.k == 0 && inst.levels.empty())
    throw hf::PreconditionError("one of --k or --levels is required");
}

int exit_for(hf::VerdictStatus status) {
  switch (status) {
    case hf::VerdictStatus::Factorable: return kExitOk;
    case hf::VerdictStatus::NotFactorable: return kExitNo;
    default: return kExitUnknown;
  }
}

hf::Verdict verdict_for(const Instance& inst) {
  const hf::LevelSet levels = inst.level_set();
  return hf::decide_general(inst.n, levels);
}

void print_witness(std::ostream& out, const hf::Witness& witness) {
  std::visit(
      [&](const auto& w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, hf::Construction>) {
          out << "construction: " << hf::branch_name(w.plan.branch) << '\n';
        } else if constexpr (std::is_same_v<T, hf::CertificateWitness>) {
          out << "certificate (n=" << w.n << " levels=" << w.levels.to_string()
              << ", " << w.source << "): " << hf::format_certificate(w.certificate) << '\n';
        } else if constexpr (std::is_same_v<T, hf::SolutionWitness>) {
          out << "solution:\n";
          hf::write_solution(out, w.solution);
        } else if constexpr (std::is_same_v<T, hf::ExhaustionRecord>) {
          out << "exhausted search over " << w.nodes << " nodes\n";
        }
      },
      witness);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  return file;
}

int cmd_decide(const Instance& inst) {
  require_instance(inst);
  const hf::Verdict v = verdict_for(inst);
  std::cout << hf::status_name(v.status) << '\n' << "reason: " << v.reason << '\n';
  print_witness(std::cout, v.witness);
  return exit_for(v.status);
}

int cmd_construct(const Instance& inst, const std::string& out_path, bool trace) {
  require_instance(inst);
  const hf::LevelSet levels = inst.level_set();
  const hf::Verdict v = verdict_for(inst);
  if (v.status != hf::VerdictStatus::Factorable) {
    std::cerr << hf::status_name(v.status) << ": " << v.reason << '\n';
    return exit_for(v.status);
  }
  hf::FlowOptions flow;
  if (trace) flow.trace = &std::cerr;
  const hf::Factorization fact = hf::construct(inst.n, levels, flow);
  std::ofstream file;
  hf::write_factorization(open_output(out_path, file), fact);
  return kExitOk;
}

int cmd_solve(const Instance& inst) {
  require_instance(inst);
  const hf::Verdict v = verdict_for(inst);
  if (const auto* c = std::get_if<hf::Construction>(&v.witness)) {
    hf::write_construction(std::cout, *c);
    return kExitOk;
  }
  if (const auto* s = std::get_if<hf::SolutionWitness>(&v.witness)) {
    hf::write_solution(std::cout, s->solution);
    return kExitOk;
  }
  std::cerr << hf::status_name(v.status) << ": " << v.reason << '\n';
  return exit_for(v.status) == kExitOk ? kExitError : exit_for(v.status);
}

int cmd_certificate(const Instance& inst, const std::string& out_path) {
  require_instance(inst);
  const hf::Verdict v = verdict_for(inst);
  const auto* w = std::get_if<hf::CertificateWitness>(&v.witness);
  if (!w) {
    std::cerr << "no certificate: " << hf::status_name(v.status) << ": " << v.reason << '\n';
    return v.status == hf::VerdictStatus::Factorable ? kExitError : exit_for(v.status);
  }
  std::ofstream file;
  hf::write_certificate(open_output(out_path, file), {w->n, w->levels, w->certificate});
  return kExitOk;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream stream(text);

  if (text.starts_with("HYPERFACTOR v1\n")) {
    const hf::Factorization fact = hf::read_factorization(stream);
    const hf::VerificationReport report = hf::verify_factorization(fact);
    if (report.ok()) {
      std::cout << "OK: " << fact.factors.size() << " factors\n";
      return kExitOk;
    }
    for (const hf::Violation& violation : report.violations)
      std::cout << "violation: " << violation.message << '\n';
    if (report.suppressed > 0)
      std::cout << "violation: " << report.suppressed << " more not listed\n";
    return kExitNo;
  }
  if (text.starts_with("FARKAS v1\n")) {
    const hf::CertificateFile file = hf::read_certificate(stream);
    const hf::CertificateTest test = hf::check_certificate(file.n, file.levels, file.certificate);
    if (test.valid) {
      std::cout << "OK: b.y = " << hf::format_rational(test.objective)
                << ", min row = " << hf::format_rational(test.min_row) << '\n';
      return kExitOk;
    }
    std::cout << "invalid: b.y = " << hf::format_rational(test.objective);
    if (test.minimizing_type)
      std::cout << ", row " << test.minimizing_type->to_string() << " gives "
                << hf::format_rational(test.min_row);
    std::cout << '\n';
    return kExitNo;
  }
  throw hf::ParseError("unrecognized file header");
}

int cmd_types(const Instance& inst) {
  require_instance(inst);
  const hf::LevelSet levels = inst.level_set();
  const hf::Integer count = hf::count_types(inst.n, levels);
  if (count > 1'000'000)
    throw hf::LimitExceeded(count.get_str() + " types; refusing to list more than 1000000");
  for (const hf::TypeVector& t : hf::enumerate_types(inst.n, levels))
    std::cout << t.to_string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-factorizations of families of subsets by level"};
  app.require_subcommand(1);

  Instance inst;
  std::string out_path;
  std::string file_path;
  bool trace = false;

  auto* decide = app.add_subcommand("decide", "decide 1-factorability");
  add_instance_options(decide, inst);
  auto* construct = app.add_subcommand("construct", "build and verify a 1-factorization");
  add_instance_options(construct, inst);
  construct->add_option("--out", out_path, "output file (default stdout)");
  construct->add_flag("--trace", trace, "one line per flow step on stderr");
  auto* solve = app.add_subcommand("solve", "print the solution of the level system");
  add_instance_options(solve, inst);
  auto* certificate = app.add_subcommand("certificate", "print a Farkas certificate");
  add_instance_options(certificate, inst);
  certificate->add_option("--out", out_path, "output file (default stdout)");
  auto* verify = app.add_subcommand("verify", "check a factorization or certificate file");
  verify->add_option("--file", file_path, "HYPERFACTOR v1 or FARKAS v1 file")->required();
  auto* types = app.add_subcommand("types", "list (n, L)-types in canonical order");
  add_instance_options(types, inst);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (decide->parsed()) return cmd_decide(inst);
    if (construct->parsed()) return cmd_construct(inst, out_path, trace);
    if (solve->parsed()) return cmd_solve(inst);
    if (certificate->parsed()) return cmd_certificate(inst, out_path);
    if (verify->parsed()) return cmd_verify(file_path);
    if (types->parsed()) return cmd_types(inst);
  } catch (const hf::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
