#pragma once

#include <chrono>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace wpb::verify {

struct CheckRecord {
  std::string group;
  std::string name;
  double measured_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double runtime_seconds = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  bool overall() const;

  /// Times `body`, which returns the measured error, and records the check as
  /// passed when error <= tolerance. An exception is recorded as a failure with
  /// an infinite error and its message in `detail`.
  void run(const std::string& group, const std::string& name, double tolerance, const std::function<double()>& body);

  /// Like run(), for checks whose outcome is a predicate rather than an error.
  void run_predicate(const std::string& group, const std::string& name, const std::function<bool()>& body);

  void append(const VerificationReport& other);
};

std::string to_json(const VerificationReport& report);
void write_json(const VerificationReport& report, const std::string& path);
void print_table(const VerificationReport& report, std::ostream& os);

}  // namespace wpb::verify
