#ifndef JALG_CHECKS_HPP
#define JALG_CHECKS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "jalg/rng.hpp"

namespace jalg {

struct CheckResult {
  std::string id;
  std::string section;
  bool pass = true;
  std::string witness;                // set on failure
  std::vector<std::string> detail;    // emitted artifacts, printed as DETAIL lines
};

struct SuiteReport {
  std::vector<CheckResult> results;
  int passed = 0;
  int failed = 0;
  bool all_pass() const { return failed == 0; }
};

struct CheckDef {
  std::string id;
  std::string section;
  std::function<CheckResult(Rng&)> run;
};

/// All suite checks in fixed registration order; ids carry a section anchor
/// prefix (3.1 ... 5.2) used by --filter.
const std::vector<CheckDef>& check_registry();

/// Runs every check whose section starts with the filter (empty = all). Each
/// check draws from an independent substream keyed by (seed, id), so reports
/// are byte-deterministic for a given seed and filter.
SuiteReport run_paper_suite(const std::string& section_filter, std::uint64_t seed);

/// One `CHECK <id> <PASS|FAIL>` line per check, WITNESS/DETAIL lines where
/// present, and a SUMMARY trailer.
void print_suite_report(std::ostream& os, const SuiteReport& report);

}  // namespace jalg

#endif
