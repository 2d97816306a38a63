#include "wpb/verify/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace wpb::verify {

bool VerificationReport::overall() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void VerificationReport::run(const std::string& group, const std::string& name, double tolerance,
                             const std::function<double()>& body) {
  CheckRecord rec{group, name, 0.0, tolerance, false, 0.0, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    rec.measured_error = body();
    rec.passed = std::isfinite(rec.measured_error) && rec.measured_error <= tolerance;
  } catch (const std::exception& e) {
    rec.measured_error = std::numeric_limits<double>::infinity();
    rec.detail = e.what();
  }
  rec.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  checks.push_back(std::move(rec));
}

void VerificationReport::run_predicate(const std::string& group, const std::string& name,
                                       const std::function<bool()>& body) {
  run(group, name, 0.0, [&] { return body() ? 0.0 : 1.0; });
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["overall"] = report.overall();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json r;
    r["group"] = c.group;
    r["name"] = c.name;
    // JSON has no infinity; a failed evaluation is reported as null.
    if (std::isfinite(c.measured_error)) {
      r["measured_error"] = c.measured_error;
    } else {
      r["measured_error"] = nullptr;
    }
    r["tolerance"] = c.tolerance;
    r["passed"] = c.passed;
    r["runtime"] = c.runtime_seconds;
    if (!c.detail.empty()) r["detail"] = c.detail;
    j["checks"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

void write_json(const VerificationReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report to '" + path + "'");
  out << to_json(report);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void print_table(const VerificationReport& report, std::ostream& os) {
  char line[512];
  std::snprintf(line, sizeof line, "%-6s %-13s %-52s %11s %11s %9s\n", "status", "group", "check", "error", "tolerance",
                "time[s]");
  os << line;
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof line, "%-6s %-13s %-52s %11.3e %11.3e %9.3f\n", c.passed ? "PASS" : "FAIL",
                  c.group.c_str(), c.name.c_str(), c.measured_error, c.tolerance, c.runtime_seconds);
    os << line;
    if (!c.detail.empty()) os << "       " << c.detail << '\n';
  }
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += c.passed ? 0 : 1;
  os << "suite " << report.suite << ": " << report.checks.size() - failed << "/" << report.checks.size()
     << " checks passed, overall " << (report.overall() ? "PASS" : "FAIL") << '\n';
}

}  // namespace wpb::verify
