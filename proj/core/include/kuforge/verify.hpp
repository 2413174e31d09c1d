#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kuforge::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  // first mismatch, or a short summary when passed
};

struct SuiteReport {
  std::string suite;
  int criterion = 0;  // 1..8 for acceptance suites, 0 for module invariants
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
  std::size_t failures() const;
  // "PASS criterion 3 [groupring] ..." for acceptance suites, "PASS [exactla] ..." otherwise.
  std::string summary_line() const;
};

struct SuiteInfo {
  std::string name;
  int criterion;
  std::string title;
};

struct VerifyOptions {
  std::optional<int> rank;  // restrict every rank loop to this value
  int jobs = 1;
};

// Acceptance suites first, in criterion order, then module invariant suites.
const std::vector<SuiteInfo>& suites();
bool is_suite(const std::string& name);

// Throws std::invalid_argument for an unknown suite or a rank outside the suite's range.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});
// Suites run concurrently up to opt.jobs; reports come back in the order given.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const VerifyOptions& opt = {});
std::vector<SuiteReport> run_acceptance(const VerifyOptions& opt = {});
std::vector<SuiteReport> run_all(const VerifyOptions& opt = {});

}  // namespace kuforge::verify
