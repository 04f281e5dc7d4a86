// Acceptance suite: runs every acceptance criterion end to end and prints one
// line per criterion. Exit code 0 iff all criteria pass.
//
// Usage: acceptance [--cli <path-to-jalg-binary>]
// The CLI path is needed for the determinism criterion; it is passed by ctest.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "jalg/checks.hpp"
#include "jalg/jalgebra.hpp"

namespace {

using namespace jalg;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Acceptance {
  bool all_pass = true;

  void report(int number, const std::string& slug, bool pass, const std::string& note = "") {
    all_pass = all_pass && pass;
    std::cout << "CRITERION " << number << " " << slug << " " << (pass ? "PASS" : "FAIL");
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n";
  }
};

// Looks up suite results by check id; fails loudly on unknown ids.
bool checks_pass(const std::map<std::string, bool>& results, const std::vector<std::string>& ids,
                 std::string& note) {
  for (const std::string& id : ids) {
    auto it = results.find(id);
    if (it == results.end()) {
      note = "missing check " + id;
      return false;
    }
    if (!it->second) {
      note = "failing check " + id;
      return false;
    }
  }
  return true;
}

bool run_cli(const std::string& cli, const std::string& args, std::string& output, int& exit_code) {
  std::string command = cli + " " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return false;
  char buffer[4096];
  output.clear();
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  int status = pclose(pipe);
  exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int k = 1; k + 1 < argc; ++k)
    if (std::string(argv[k]) == "--cli") cli = argv[k + 1];

  Acceptance acc;

  // Criterion 1: the axiom suite passes for every catalog, each under 1 s.
  {
    bool pass = true;
    std::string note;
    double worst = 0.0;
    std::vector<std::pair<DomainKind, int>> specs;
    for (int n = 2; n <= 8; ++n) specs.push_back({DomainKind::ball, n});
    for (int n = 3; n <= 8; ++n) specs.push_back({DomainKind::lieball, n});
    specs.push_back({DomainKind::siegel3, 3});
    specs.push_back({DomainKind::d5, 0});
    for (auto [kind, n] : specs) {
      Clock::time_point start = Clock::now();
      try {
        NormalJAlgebra a = catalog_make(kind, n);
        AxiomReport report = check_axioms(a);
        if (!report.all_pass() && pass) {
          pass = false;
          note = a.name + ": " + report.first_failure();
        }
      } catch (const std::exception& e) {
        if (pass) {
          pass = false;
          note = e.what();
        }
      }
      double elapsed = seconds_since(start);
      worst = std::max(worst, elapsed);
      if (elapsed >= 1.0 && pass) {
        pass = false;
        note = "construction plus axiom check took " + std::to_string(elapsed) + " s";
      }
    }
    std::ostringstream timing;
    timing.precision(3);
    timing << "slowest " << std::fixed << worst << " s";
    acc.report(1, "axiom-suite", pass, pass ? timing.str() : note);
  }

  // One full suite run backs criteria 2-11.
  Clock::time_point suite_start = Clock::now();
  SuiteReport suite = run_paper_suite("", 1);
  double suite_seconds = seconds_since(suite_start);
  std::map<std::string, bool> results;
  for (const CheckResult& r : suite.results) results[r.id] = r.pass;

  struct Mapping {
    int number;
    std::string slug;
    std::vector<std::string> ids;
  };
  const std::vector<Mapping> mappings = {
      {2,
       "bracket-table-fidelity",
       {"3.2-ball-bracket-table", "4.1-lieball-bracket-table", "5.1-d5-bracket-table", "5.1-field-table",
        "3.2-mutation-guard"}},
      {3, "heisenberg-relation", {"3.2-heisenberg-identity"}},
      {4, "ball-completion", {"3.2-completion-sweep", "3.2-completion-examples"}},
      {5, "lieball-completion", {"4.2-completion-traces", "4.2-xi1prime-obstruction"}},
      {6, "stein-decisions", {"4.2-stein-decisions", "3.1-heisenberg-subalgebra"}},
      {7,
       "counterexample-domain",
       {"5.2-generators", "5.2-ytau-centralizes", "5.2-normalizer", "5.2-pinch-point-dependence",
        "5.2-extension-classification"}},
      {8, "matrix-group-action", {"5.2-group-closure", "5.1-flow-vs-group"}},
      {9, "freeness", {"5.2-freeness"}},
      {10, "trivialization-chain", {"5.2-trivialization-chain", "5.2-trivialization-mutations", "5.2-bezout"}},
      {11, "heisenberg-ball-example", {"3.1-heisenberg-bracket", "3.1-heisenberg-orbits"}},
  };
  for (const Mapping& m : mappings) {
    std::string note;
    bool pass = checks_pass(results, m.ids, note);
    acc.report(m.number, m.slug, pass, note);
  }

  // Criterion 12: byte-identical reports for a fixed seed, full run under 60 s.
  {
    bool pass = true;
    std::string note;
    if (cli.empty()) {
      pass = false;
      note = "no --cli path provided";
    } else {
      std::string first, second;
      int code1 = -1, code2 = -1;
      Clock::time_point start = Clock::now();
      bool ok1 = run_cli(cli, "paper-suite --seed 1", first, code1);
      double one_run = seconds_since(start);
      bool ok2 = run_cli(cli, "paper-suite --seed 1", second, code2);
      if (!ok1 || !ok2) {
        pass = false;
        note = "could not launch the CLI";
      } else if (first != second) {
        pass = false;
        note = "reports differ between runs";
      } else if (code1 != 0 || code2 != 0) {
        pass = false;
        note = "suite exit code " + std::to_string(code1);
      } else if (one_run >= 60.0 || suite_seconds >= 60.0) {
        pass = false;
        note = "suite run took " + std::to_string(std::max(one_run, suite_seconds)) + " s";
      } else {
        std::ostringstream timing;
        timing.precision(3);
        timing << "run " << std::fixed << one_run << " s";
        note = timing.str();
      }
    }
    acc.report(12, "cli-determinism", pass, note);
  }

  std::cout << (acc.all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
  return acc.all_pass ? 0 : 1;
}
