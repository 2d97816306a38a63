#include "wpb/verify/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wpb::verify {
namespace {

struct Default {
  const char* key;
  double value;
};

constexpr Default kDefaults[] = {
    {"algebra.floating_relative", 1e-13},
    {"algebra.taylor_shift", 1e-12},
    {"catalog.derivative", 1e-6},
    {"catalog.mgf", 1e-9},
    {"catalog.decay", 1e-12},
    {"catalog.taylor", 1e-8},
    {"pairing.biorthonormality", 1e-12},
    {"pairing.moments", 1e-10},
    {"pairing.antilinearity", 1e-12},
    {"pairing.mirror", 1e-10},
    {"pairing.monotone_slack", 1e-12},
    {"quadrature.moments", 1e-12},
    {"quadrature.floor", 1e-12},
    {"bicoherent.series", 1e-10},
    {"bicoherent.weak_eigen", 1e-9},
    {"bicoherent.weak_eigen_psi", 1e-13},
    {"bicoherent.rotation", 1e-8},
    {"bicoherent.monotone_slack", 1e-12},
    {"bicoherent.ridge", 1e-12},
    {"bicoherent.symmetry", 1e-12},
    {"identities.resolution", 1e-6},
    {"identities.complex_delta", 1e-8},
    {"displacement.w", 1e-12},
    {"displacement.v_monomial", 1e-10},
    {"displacement.bch", 1e-10},
    {"displacement.w_vs_fpsi", 1e-10},
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_value(const std::string& text, const std::string& where) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::runtime_error(where + ": '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(v) || v < 0.0) {
    throw std::runtime_error(where + ": tolerance '" + text + "' must be a finite non-negative number");
  }
  return v;
}

}  // namespace

ToleranceConfig ToleranceConfig::defaults() {
  ToleranceConfig c;
  for (const auto& d : kDefaults) c.values_[d.key] = d.value;
  return c;
}

std::string ToleranceConfig::default_text() {
  std::ostringstream os;
  os << "# Default tolerances (key = value). Override with --config FILE or --tol key=value.\n";
  for (const auto& d : kDefaults) os << d.key << " = " << d.value << '\n';
  return os.str();
}

ToleranceConfig ToleranceConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read tolerance file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  ToleranceConfig c = defaults();
  c.merge_text(text.str(), path);
  return c;
}

void ToleranceConfig::merge_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw std::runtime_error(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    if (!values_.count(key)) throw std::runtime_error(where + ": unknown tolerance key '" + key + "'");
    values_[key] = parse_value(trim(line.substr(eq + 1)), where);
  }
}

void ToleranceConfig::set(const std::string& key, double value) {
  if (!values_.count(key)) throw std::runtime_error("unknown tolerance key '" + key + "'");
  if (!std::isfinite(value) || value < 0.0) throw std::runtime_error("tolerance for '" + key + "' must be >= 0");
  values_[key] = value;
}

void ToleranceConfig::apply_override(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw std::runtime_error("override '" + assignment + "' is not key=value");
  const std::string key = trim(assignment.substr(0, eq));
  set(key, parse_value(trim(assignment.substr(eq + 1)), "override"));
}

double ToleranceConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw std::out_of_range("unknown tolerance key '" + key + "'");
  return it->second;
}

}  // namespace wpb::verify
