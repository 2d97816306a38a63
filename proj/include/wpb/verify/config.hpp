#pragma once

#include <map>
#include <string>

namespace wpb::verify {

/// Per-check tolerances as plain `key = value` pairs. Every key has a built-in
/// default; files and overrides may only change known keys.
class ToleranceConfig {
 public:
  static ToleranceConfig defaults();

  /// Defaults overlaid with the file at `path`. Blank lines and `#` comments are
  /// ignored. Throws std::runtime_error on unreadable files, syntax errors and
  /// unknown keys.
  static ToleranceConfig load(const std::string& path);

  void merge_text(const std::string& text, const std::string& origin);
  void set(const std::string& key, double value);
  /// "key=value", as accepted on the command line.
  void apply_override(const std::string& assignment);

  double get(const std::string& key) const;
  const std::map<std::string, double>& values() const noexcept { return values_; }

  /// The defaults rendered in the configuration file syntax.
  static std::string default_text();

 private:
  std::map<std::string, double> values_;
};

}  // namespace wpb::verify
