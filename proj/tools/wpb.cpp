#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wpb/bicoherent.hpp"
#include "wpb/pairing.hpp"
#include "wpb/test_functions.hpp"
#include "wpb/verify/config.hpp"
#include "wpb/verify/grid_io.hpp"
#include "wpb/verify/heatmap.hpp"
#include "wpb/verify/suites.hpp"

namespace {

constexpr int kUsageError = 2;

std::string format_complex(wpb::Complex z) {
  char buf[80];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real() == 0.0 ? 0.0 : z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

void add_grid_options(CLI::App& cmd, wpb::GridSpec& grid) {
  cmd.add_option("--re-min", grid.re_min, "Smallest Re z")->capture_default_str();
  cmd.add_option("--re-max", grid.re_max, "Largest Re z")->capture_default_str();
  cmd.add_option("--im-min", grid.im_min, "Smallest Im z")->capture_default_str();
  cmd.add_option("--im-max", grid.im_max, "Largest Im z")->capture_default_str();
  cmd.add_option("--n-re", grid.n_re, "Nodes along Re z")->capture_default_str();
  cmd.add_option("--n-im", grid.n_im, "Nodes along Im z")->capture_default_str();
}

int run_verify(const std::string& suite, const std::string& config_path, const std::vector<std::string>& overrides,
               const std::string& json_path) {
  wpb::verify::ToleranceConfig tol;
  try {
    tol = config_path.empty() ? wpb::verify::ToleranceConfig::defaults() : wpb::verify::ToleranceConfig::load(config_path);
    for (const auto& o : overrides) tol.apply_override(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  const auto report = wpb::verify::run_suite(suite, tol);
  if (!report) {
    std::cerr << "error: unknown suite '" << suite << "'\n";
    return kUsageError;
  }
  wpb::verify::print_table(*report, std::cout);
  if (!json_path.empty()) {
    try {
      wpb::verify::write_json(*report, json_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return report->overall() ? 0 : 1;
}

int run_pair(long n, long m) {
  if (n < 0 || m < 0) {
    std::cerr << "error: indices must be non-negative\n";
    return kUsageError;
  }
  const auto un = static_cast<unsigned>(n);
  const auto um = static_cast<unsigned>(m);
  const auto exact = wpb::pair_phi_psi_exact(un, um);
  const auto raw = wpb::conv_poly_delta(un, um, wpb::ExactComplex(0));
  std::cout << "pair_phi_psi(" << n << "," << m << ") = " << format_complex(wpb::to_complex(exact)) << '\n';
  std::cout << "conv_poly_delta(" << n << "," << m << ",0) = " << format_complex(raw.to_complex()) << '\n';
  return 0;
}

int run_grid(const std::string& state_name, double sigma, const wpb::GridSpec& grid, const std::string& out,
             unsigned threads) {
  const auto state = wpb::parse_state(state_name);
  if (!state) {
    std::cerr << "error: unknown state '" << state_name << "' (expected phi, psi or cs)\n";
    return kUsageError;
  }
  try {
    grid.validate();
    const auto f = wpb::gaussian_f_sigma(sigma);
    const auto values = wpb::grid_eval(*state, f, grid, {}, threads);
    wpb::verify::write_grid_csv(out, grid, values);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run_figure(double sigma, const wpb::GridSpec& grid, const std::string& prefix, unsigned threads) {
  const bool png = wpb::verify::heatmap_available();
  if (!png) std::cerr << "warning: no PNG backend in this build, writing CSV grids instead\n";
  try {
    grid.validate();
    const auto f = wpb::gaussian_f_sigma(sigma);
    for (auto state : {wpb::StateKind::Phi, wpb::StateKind::Psi, wpb::StateKind::Cs}) {
      const auto values = wpb::grid_eval(state, f, grid, {}, threads);
      const std::string base = prefix + "_" + std::string(wpb::to_string(state));
      if (png) {
        wpb::verify::write_heatmap_png(base + ".png", values);
        std::cout << base << ".png\n";
      } else {
        wpb::verify::write_grid_csv(base + ".csv", grid, values);
        std::cout << base << ".csv\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak pseudo-boson identities: verification, pairings and coherent-state grids"};
  app.require_subcommand(1);

  std::string suite = "all";
  std::string json_path;
  std::string config_path;
  std::vector<std::string> overrides;
  auto* verify = app.add_subcommand("verify", "Run an identity suite and report every check");
  verify->add_option("--suite", suite, "algebra, pairing, bicoherent, identities, displacement or all")
      ->capture_default_str();
  verify->add_option("--json", json_path, "Write the structured report to this file");
  verify->add_option("--config", config_path, "Tolerance file (key = value)");
  verify->add_option("--tol", overrides, "Override one tolerance, key=value (repeatable)");

  long n = 0;
  long m = 0;
  auto* pair = app.add_subcommand("pair", "Print <phi_n, psi_m> and the raw convolution at 0");
  pair->add_option("n", n)->required();
  pair->add_option("m", m)->required();

  std::string state = "phi";
  double sigma = 1.0;
  wpb::GridSpec grid;
  std::string out;
  unsigned threads = 1;
  auto* grid_cmd = app.add_subcommand("grid", "Write |F_state[f_sigma](z)| on a grid as CSV");
  grid_cmd->add_option("--state", state, "phi, psi or cs")->capture_default_str();
  grid_cmd->add_option("--sigma", sigma, "Width of the Gaussian f_sigma")->capture_default_str();
  add_grid_options(*grid_cmd, grid);
  grid_cmd->add_option("--out", out, "CSV output path")->required();
  grid_cmd->add_option("--threads", threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  std::string prefix = "figure";
  auto* figure = app.add_subcommand("figure", "Render the phi, psi and cs grids as heat maps");
  figure->add_option("--sigma", sigma, "Width of the Gaussian f_sigma")->capture_default_str();
  add_grid_options(*figure, grid);
  figure->add_option("--prefix", prefix, "Output prefix: <prefix>_{phi,psi,cs}.png")->capture_default_str();
  figure->add_option("--threads", threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (*verify) return run_verify(suite, config_path, overrides, json_path);
  if (*pair) return run_pair(n, m);
  if (*grid_cmd) return run_grid(state, sigma, grid, out, threads);
  return run_figure(sigma, grid, prefix, threads);
}
