#ifndef WEINSTEIN_REPORT_HPP
#define WEINSTEIN_REPORT_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace weinstein {

/// Exact values travel as "p/q" strings, float values as doubles.
using ReportValue = std::variant<std::string, double>;

/// Outcome of one verification case.
struct Report {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> inputs;
  ReportValue lhs;
  ReportValue rhs;
  bool pass = false;
  /// Exactly 0 for a passing exact case; |lhs - rhs| (or its relative
  /// form, where the suite says so) for float cases.
  double discrepancy = 0.0;

  bool is_exact() const { return std::holds_alternative<std::string>(lhs); }
};

struct SuiteReport {
  std::string suite;
  std::vector<Report> cases;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }
  void append(SuiteReport other);
};

/// {suite, cases: [{suite, inputs, lhs, rhs, pass, discrepancy}], passed, failed}
nlohmann::json to_json(const SuiteReport& report);
nlohmann::json to_json(const Report& report);

std::string format_double(double v);

} // namespace weinstein

#endif
