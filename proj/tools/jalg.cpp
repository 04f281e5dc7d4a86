// Command-line front end: catalog emission, axiom verification, totally-real
// and Steinness decisions, completions, normalizers, orbit checks, and the
// built-in check suite.
//
// Exit codes: 0 = success / positive verdict, 1 = negative verdict or failed
// checks, 2 = usage or parse errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "jalg/checks.hpp"
#include "jalg/io.hpp"
#include "jalg/siegel.hpp"
#include "jalg/totally_real.hpp"

namespace {

using namespace jalg;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

NormalJAlgebra load_algebra(const std::string& arg) {
  DomainKind kind;
  int n = 0;
  if (parse_catalog_spec(arg, kind, n)) return catalog_make(kind, n);
  std::istringstream in(slurp(arg));
  try {
    return parse_algebra(in);
  } catch (const ParseError& e) {
    throw UsageError(arg + ": " + e.what());
  }
}

// Commands other than `verify` refuse tables that are not Lie algebras.
NormalJAlgebra load_valid_algebra(const std::string& arg) {
  NormalJAlgebra a = load_algebra(arg);
  JacobiDefect defect = a.alg.jacobi_defect();
  if (!defect.zero)
    throw UsageError(arg + ": structure constants violate the Jacobi identity on basis triple (" +
                     a.alg.label(defect.i) + ", " + a.alg.label(defect.j) + ", " + a.alg.label(defect.k) + ")");
  return a;
}

Subspace load_subspace(const std::string& arg, const NormalJAlgebra& alg) {
  std::istringstream in(slurp(arg));
  try {
    return parse_subspace(in, alg);
  } catch (const ParseError& e) {
    throw UsageError(arg + ": " + e.what());
  }
}

int run_verify(const std::string& algebra_arg) {
  NormalJAlgebra a = load_algebra(algebra_arg);
  AxiomReport report = check_axioms(a);
  for (const AxiomCheck& check : report.checks) {
    std::cout << "AXIOM " << check.id << " " << (check.pass ? "PASS" : "FAIL");
    if (!check.pass && !check.witness.empty()) std::cout << " " << check.witness;
    std::cout << "\n";
  }
  std::cout << "VERDICT " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  return report.all_pass() ? kExitPass : kExitFail;
}

int run_catalog(const std::string& spec, bool emit) {
  DomainKind kind;
  int n = 0;
  if (!parse_catalog_spec(spec, kind, n)) throw UsageError("unknown catalog spec '" + spec + "'");
  NormalJAlgebra a = catalog_make(kind, n);
  if (emit) {
    std::cout << print_algebra(a);
  } else {
    std::cout << "catalog " << a.name << " dim=" << a.dim() << " nilradical-dim=" << a.nilradical_indices.size()
              << " axioms=" << (check_axioms(a).all_pass() ? "PASS" : "FAIL") << "\n";
  }
  return kExitPass;
}

int run_totally_real(const std::string& algebra_arg, const std::string& subspace_arg) {
  NormalJAlgebra a = load_valid_algebra(algebra_arg);
  Subspace s = load_subspace(subspace_arg, a);
  bool tr = is_totally_real(a, s);
  std::cout << (tr ? "TOTALLY-REAL" : "NOT-TOTALLY-REAL") << "\n";
  return tr ? kExitPass : kExitFail;
}

int run_complete(const std::string& algebra_arg, const std::string& subspace_arg, const std::string& mode) {
  NormalJAlgebra a = load_valid_algebra(algebra_arg);
  Subspace s = load_subspace(subspace_arg, a);

  std::string effective = mode;
  if (effective.empty()) {
    if (a.kind == DomainKind::ball)
      effective = "ball";
    else if (a.kind == DomainKind::lieball)
      effective = "lieball";
    else
      throw UsageError("no completion mode for this algebra kind; pass --mode ball|lieball");
  }

  CompletionResult r;
  try {
    r = effective == "ball" ? complete_ball(a, s) : complete_lie_ball(a, s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  switch (r.status) {
    case CompletionStatus::completed: {
      std::cout << "COMPLETED\n" << print_subspace(r.result, a, "completion");
      for (const CompletionStep& step : r.trace) {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k < a.dim(); ++k) {
          if (step.added(k).is_zero()) continue;
          if (!first) os << " + ";
          os << step.added(k) << "*" << a.alg.label(k);
          first = false;
        }
        std::cout << "TRACE " << step.rule << " " << (first ? "0" : os.str()) << "\n";
      }
      return kExitPass;
    }
    case CompletionStatus::not_applicable:
      std::cout << "NOT-APPLICABLE " << r.message << "\n";
      return kExitFail;
    case CompletionStatus::failed:
      std::cout << "FAILED " << r.message << "\n";
      return kExitFail;
  }
  return kExitFail;
}

int run_stein(const std::string& algebra_arg, const std::string& subspace_arg) {
  NormalJAlgebra a = load_valid_algebra(algebra_arg);
  Subspace s = load_subspace(subspace_arg, a);
  SteinVerdict v;
  try {
    v = stein_decide(a, s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  switch (v.verdict) {
    case SteinStatus::stein:
      std::cout << "STEIN\n";
      return kExitPass;
    case SteinStatus::not_stein:
      std::cout << "NOT-STEIN\n";
      return kExitFail;
    case SteinStatus::advisory: {
      std::cout << "ADVISORY";
      for (const std::string& reason : v.reasons) std::cout << " " << reason;
      std::cout << "\n";
      bool positive = !v.reasons.empty() && v.reasons.front() == "prop-suff-holds";
      return positive ? kExitPass : kExitFail;
    }
  }
  return kExitFail;
}

int run_normalizer(const std::string& algebra_arg, const std::string& subspace_arg) {
  NormalJAlgebra a = load_valid_algebra(algebra_arg);
  Subspace s = load_subspace(subspace_arg, a);
  try {
    std::cout << print_subspace(normalizer(a.alg, s), a, "normalizer");
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kExitPass;
}

int run_orbit_check(const std::string& algebra_arg, const std::string& subspace_arg, const std::string& points_path,
                    int random_count, std::uint64_t seed) {
  NormalJAlgebra a = load_valid_algebra(algebra_arg);
  if (a.kind != DomainKind::d5) throw UsageError("orbit-check supports the d5 catalog only");
  Subspace s = load_subspace(subspace_arg, a);
  if (!a.in_nilradical(s)) throw UsageError("orbit-check: subspace is not inside the nilradical");

  std::vector<AffineField> fields;
  for (Eigen::Index r = 0; r < s.dim(); ++r) fields.push_back(d5_field_for_vector(a, s.basis_vector(r)));

  std::vector<NamedPoint> points;
  if (!points_path.empty()) {
    std::istringstream in(slurp(points_path));
    try {
      points = parse_points(in);
    } catch (const ParseError& e) {
      throw UsageError(points_path + ": " + e.what());
    }
    for (const NamedPoint& p : points)
      if (p.coords.size() != kSymDim)
        throw UsageError("point " + p.name + " has dimension " + std::to_string(p.coords.size()) + ", expected 6");
  } else {
    if (random_count <= 0) throw UsageError("pass --points <file> or --random <count>");
    Rng rng = Rng::keyed(seed, "orbit-check");
    for (int k = 0; k < random_count; ++k)
      points.push_back({"random" + std::to_string(k), random_domain_fiber_point(rng)});
  }

  bool all = true;
  for (const NamedPoint& p : points) {
    bool tr = orbit_totally_real_at(fields, p.coords);
    all = all && tr;
    std::cout << "POINT " << p.name << " " << (tr ? "TOTALLY-REAL" : "DEPENDENT") << "\n";
  }
  std::cout << "ORBIT-CHECK " << (all ? "PASS" : "FAIL") << "\n";
  return all ? kExitPass : kExitFail;
}

int run_suite(const std::string& filter, std::uint64_t seed) {
  SuiteReport report = run_paper_suite(filter, seed);
  print_suite_report(std::cout, report);
  return report.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jalg: exact computations in normal j-algebras and their Siegel-domain group actions"};
  app.require_subcommand(1);

  std::string algebra_arg, subspace_arg, mode, filter, points_path, catalog_spec;
  bool emit = false;
  int random_count = 0;
  std::uint64_t seed = 1;

  CLI::App* verify = app.add_subcommand("verify", "check the axioms of an algebra file ('-' = stdin)");
  verify->add_option("algebra", algebra_arg)->required();

  CLI::App* catalog = app.add_subcommand("catalog", "build a catalog algebra (ball:N, lieball:N, siegel:3, d5)");
  catalog->add_option("spec", catalog_spec)->required();
  catalog->add_flag("--emit", emit, "print the algebra file to stdout");

  CLI::App* totally = app.add_subcommand("totally-real", "test a subspace for total realness");
  totally->add_option("algebra", algebra_arg)->required();
  totally->add_option("subspace", subspace_arg)->required();

  CLI::App* complete = app.add_subcommand("complete", "extend a totally real subalgebra to a maximal one");
  complete->add_option("algebra", algebra_arg)->required();
  complete->add_option("subspace", subspace_arg)->required();
  complete->add_option("--mode", mode)->check(CLI::IsMember({"ball", "lieball"}));

  CLI::App* stein = app.add_subcommand("stein", "decide Steinness of the quotient by the spanned group");
  stein->add_option("algebra", algebra_arg)->required();
  stein->add_option("subspace", subspace_arg)->required();

  CLI::App* norm = app.add_subcommand("normalizer", "normalizer of a subalgebra");
  norm->add_option("algebra", algebra_arg)->required();
  norm->add_option("subspace", subspace_arg)->required();

  CLI::App* orbit = app.add_subcommand("orbit-check", "totally-real test of orbits at domain points");
  orbit->add_option("algebra", algebra_arg)->required();
  orbit->add_option("subspace", subspace_arg)->required();
  orbit->add_option("--points", points_path);
  orbit->add_option("--random", random_count);
  orbit->add_option("--seed", seed);

  CLI::App* suite = app.add_subcommand("paper-suite", "run the built-in check suite");
  suite->add_option("--filter", filter, "run only checks whose section anchor starts with this prefix");
  suite->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return run_verify(algebra_arg);
    if (*catalog) return run_catalog(catalog_spec, emit);
    if (*totally) return run_totally_real(algebra_arg, subspace_arg);
    if (*complete) return run_complete(algebra_arg, subspace_arg, mode);
    if (*stein) return run_stein(algebra_arg, subspace_arg);
    if (*norm) return run_normalizer(algebra_arg, subspace_arg);
    if (*orbit) return run_orbit_check(algebra_arg, subspace_arg, points_path, random_count, seed);
    if (*suite) return run_suite(filter, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
