#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kschur/io.hpp"

namespace kschur {

struct CaseResult {
  std::string label;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int m_max = 0;
  long cases = 0;
  bool passed = true;
  /// First failing case in enumeration order.
  std::optional<CaseResult> counterexample;
  /// One line per case (label and detail) for suites that print tables.
  std::vector<std::string> table;

  Json to_json() const;
  std::string to_text() const;
};

/// involution, triangularity, socle, branch, hl-filtration, pieri, muco,
/// refined-macdonald, oracle-equivalence.
const std::vector<std::string>& suite_names();
/// Default size bound of each suite.
int default_m_max(const std::string& suite);

/// Runs a named suite. Cases are spread over `jobs` threads; results are
/// reported in enumeration order, so output does not depend on `jobs`.
/// Throws DomainError for an unknown suite name.
SuiteReport run_suite(const std::string& suite, int m_max, int jobs = 1);

/// Runs independent tasks on `jobs` threads and returns results in task order.
std::vector<CaseResult> run_cases(const std::vector<std::function<CaseResult()>>& tasks, int jobs);

}  // namespace kschur
