#include "weinstein/report.hpp"

#include <algorithm>
#include <cstdio>

namespace weinstein {

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const Report& r) { return r.pass; }));
}

std::size_t SuiteReport::failed() const { return cases.size() - passed(); }

void SuiteReport::append(SuiteReport other) {
  cases.insert(cases.end(), std::make_move_iterator(other.cases.begin()),
               std::make_move_iterator(other.cases.end()));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {
nlohmann::json value_json(const ReportValue& v) {
  if (const auto* s = std::get_if<std::string>(&v))
    return *s;
  return std::get<double>(v);
}
} // namespace

nlohmann::json to_json(const Report& report) {
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& [key, value] : report.inputs)
    inputs[key] = value;
  return {{"suite", report.suite},
          {"inputs", std::move(inputs)},
          {"lhs", value_json(report.lhs)},
          {"rhs", value_json(report.rhs)},
          {"pass", report.pass},
          {"discrepancy", report.discrepancy}};
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : report.cases)
    cases.push_back(to_json(c));
  return {{"suite", report.suite},
          {"cases", std::move(cases)},
          {"passed", report.passed()},
          {"failed", report.failed()}};
}

} // namespace weinstein
