#include "wpb/verify/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "wpb/bicoherent.hpp"
#include "wpb/compensated_sum.hpp"
#include "wpb/displacement.hpp"
#include "wpb/ladder.hpp"
#include "wpb/pairing.hpp"
#include "wpb/quadrature.hpp"
#include "wpb/test_functions.hpp"

namespace wpb::verify {
namespace {

constexpr std::uint64_t kSeed = 20240611;

using ExactPoly = Polynomial<ExactComplex>;

ExactComplex random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 9);
  return ExactComplex(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

ExactPoly random_exact_poly(std::mt19937_64& rng, unsigned degree) {
  std::vector<ExactComplex> c(degree + 1);
  for (auto& v : c) v = random_rational(rng);
  if (is_zero(c.back())) c.back() = ExactComplex(1);
  return ExactPoly(std::move(c));
}

Complex random_complex(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

Polynomial<Complex> random_poly(std::mt19937_64& rng, unsigned degree) {
  std::vector<Complex> c(degree + 1);
  for (auto& v : c) v = random_complex(rng, 1.0);
  return Polynomial<Complex>(std::move(c));
}

double max_abs_coeff(const Polynomial<Complex>& p) {
  double m = 0.0;
  for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

std::vector<TestFunction> gaussians() {
  return {gaussian_f_sigma(0.95), gaussian_f_sigma(1.0), gaussian_f_sigma(1.05)};
}

std::vector<TestFunction> analytic_catalog() {
  std::vector<TestFunction> out = gaussians();
  for (unsigned n = 0; n <= 4; ++n) out.push_back(hermite_fn(n));
  out.push_back(gaussian_exp_minus_x2());
  return out;
}

std::vector<Complex> disc_points(double radius) {
  std::vector<Complex> z{Complex{}};
  for (double r : {0.5, 1.0, 1.5, 2.0})
    for (int k = 0; k < 8; ++k) z.push_back(std::polar(r * radius / 2.0, std::numbers::pi * k / 4.0 + 0.3));
  return z;
}

double binomial(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// n-th central difference at 0 with two Richardson levels (error O(h^6)).
Complex richardson_derivative(const TestFunction& f, unsigned n, double h) {
  auto central = [&](double step) {
    ComplexCompensatedSum acc;
    for (unsigned j = 0; j <= n; ++j) {
      const double sign = j % 2 == 0 ? 1.0 : -1.0;
      acc.add(sign * binomial(n, j) * f.eval_real((n / 2.0 - j) * step));
    }
    return acc.value() / std::pow(step, static_cast<int>(n));
  };
  const Complex d0 = central(h);
  const Complex d1 = central(h / 2.0);
  const Complex d2 = central(h / 4.0);
  const Complex r0 = (4.0 * d1 - d0) / 3.0;
  const Complex r1 = (4.0 * d2 - d1) / 3.0;
  return (16.0 * r1 - r0) / 15.0;
}

// Base step per order: small orders tolerate the nominal 1e-3, higher orders need
// larger steps before rounding (eps 2^n / h^n) swamps the difference quotient.
double fd_step(unsigned n) {
  static constexpr double steps[] = {1e-3, 1e-3, 1e-2, 5e-2, 5e-2, 0.1, 0.1};
  return steps[std::min<unsigned>(n, 6)];
}

// Closed-form moment of f_sigma: E[x^n] = sigma^n (n-1)!! for even n.
double gaussian_moment(double sigma, unsigned n) {
  if (n % 2 != 0) return 0.0;
  double m = 1.0;
  for (unsigned k = 1; k < n; k += 2) m *= k * sigma * sigma;
  return m;
}

}  // namespace

VerificationReport run_algebra(const ToleranceConfig& tol) {
  VerificationReport rep{"algebra", {}};
  const std::string g = "algebra";
  const double frel = tol.get("algebra.floating_relative");

  rep.run_predicate(g, "adjoint is an involution", [] {
    for (auto op : {LadderOp::A, LadderOp::B, LadderOp::ADagger, LadderOp::BDagger})
      if (adjoint(adjoint(op)) != op) return false;
    return true;
  });

  rep.run(g, "ladder relations exact k <= 30", 0.0, [] {
    double mismatches = 0;
    for (unsigned k = 0; k <= 30; ++k) {
      const ExactPhi phi = exact_phi_n(k);
      const ExactPsi psi = exact_psi_n(k);
      ExactPhi up = exact_phi_n(k + 1);
      up.multiply_by_sqrt(k + 1);
      mismatches += !(apply_to_poly(LadderOp::B, phi) == up);
      ExactPsi psi_up = exact_psi_n(k + 1);
      psi_up.multiply_by_sqrt(k + 1);
      mismatches += !(apply_to_delta(LadderOp::ADagger, psi) == psi_up);
      if (k == 0) {
        mismatches += !apply_to_poly(LadderOp::A, phi).is_zero();
        mismatches += !apply_to_delta(LadderOp::BDagger, psi).is_zero();
      } else {
        ExactPhi down = exact_phi_n(k - 1);
        down.multiply_by_sqrt(k);
        mismatches += !(apply_to_poly(LadderOp::A, phi) == down);
        ExactPsi psi_down = exact_psi_n(k - 1);
        psi_down.multiply_by_sqrt(k);
        mismatches += !(apply_to_delta(LadderOp::BDagger, psi) == psi_down);
      }
      const auto [rphi, rpsi] = exact_number_op_eigencheck(k);
      mismatches += !rphi.is_zero();
      mismatches += !rpsi.is_zero();
    }
    return mismatches;
  });

  rep.run(g, "ladder relations floating k <= 30", frel, [] {
    double worst = 0.0;
    auto rel = [&](const Polynomial<Complex>& a, const Polynomial<Complex>& b) {
      const double scale = std::max(max_abs_coeff(a), max_abs_coeff(b));
      if (scale > 0) worst = std::max(worst, max_coeff_distance(a, b) / scale);
    };
    auto rel_delta = [&](const DeltaComb<Complex>& a, const DeltaComb<Complex>& b) {
      double scale = 0.0;
      double diff = 0.0;
      for (unsigned m = 0; m <= 32; ++m) {
        scale = std::max({scale, std::abs(a.coeff(m)), std::abs(b.coeff(m))});
        diff = std::max(diff, std::abs(a.coeff(m) - b.coeff(m)));
      }
      if (scale > 0) worst = std::max(worst, diff / scale);
    };
    for (unsigned k = 0; k <= 30; ++k) {
      const double up = std::sqrt(k + 1.0);
      rel(apply_to_poly(LadderOp::B, phi_n(k)), phi_n(k + 1) * Complex(up, 0.0));
      rel_delta(apply_to_delta(LadderOp::ADagger, psi_n(k)), psi_n(k + 1) * Complex(up, 0.0));
      if (k > 0) {
        const double down = std::sqrt(static_cast<double>(k));
        rel(apply_to_poly(LadderOp::A, phi_n(k)), phi_n(k - 1) * Complex(down, 0.0));
        rel_delta(apply_to_delta(LadderOp::BDagger, psi_n(k)), psi_n(k - 1) * Complex(down, 0.0));
      } else if (!apply_to_poly(LadderOp::A, phi_n(0)).is_zero() ||
                 !apply_to_delta(LadderOp::BDagger, psi_n(0)).empty()) {
        worst = std::max(worst, 1.0);
      }
    }
    return worst;
  });

  rep.run(g, "number operator floating k <= 30", 0.0, [] {
    double worst = 0.0;
    for (unsigned k = 0; k <= 30; ++k) {
      const auto [rphi, rpsi] = number_op_eigencheck(k);
      worst = std::max(worst, max_abs_coeff(rphi));
      for (const auto& [m, c] : rpsi.terms()) worst = std::max(worst, std::abs(c));
    }
    return worst;
  });

  rep.run(g, "commutator exact degree <= 50", 0.0, [] {
    std::mt19937_64 rng(kSeed);
    double nonzero = 0;
    for (unsigned deg = 0; deg <= 50; deg += 5) nonzero += !commutator_check(random_exact_poly(rng, deg)).is_zero();
    return nonzero;
  });

  rep.run(g, "commutator floating degree <= 50", frel, [] {
    std::mt19937_64 rng(kSeed + 1);
    double worst = 0.0;
    for (unsigned deg = 0; deg <= 50; deg += 5) {
      const auto p = random_poly(rng, deg);
      worst = std::max(worst, max_abs_coeff(commutator_check(p)) / max_abs_coeff(p));
    }
    return worst;
  });

  rep.run_predicate(g, "canonical form closure", [] {
    auto canonical = [](const Polynomial<Complex>& p) { return p.is_zero() || p.coeffs().back() != Complex{}; };
    auto canonical_d = [](const DeltaComb<Complex>& d) {
      for (const auto& [m, c] : d.terms())
        if (c == Complex{}) return false;
      return true;
    };
    std::mt19937_64 rng(kSeed + 2);
    for (int t = 0; t < 20; ++t) {
      const auto p = random_poly(rng, 1 + t % 7);
      for (auto op : {LadderOp::A, LadderOp::B, LadderOp::ADagger, LadderOp::BDagger}) {
        if (!canonical(apply_to_poly(op, p))) return false;
        if (!canonical_d(apply_to_delta(op, psi_n(t % 5)))) return false;
      }
      if (!(p - p).is_zero() || !canonical(commutator_check(p)) || !canonical(taylor_shift(p, Complex(0.5, -1)))) {
        return false;
      }
      if (!(psi_n(3) - psi_n(3)).empty()) return false;
    }
    return apply_to_delta(LadderOp::BDagger, psi_n(0)).empty() && apply_to_poly(LadderOp::A, phi_n(0)).is_zero();
  });

  rep.run(g, "taylor shift round trip exact", 0.0, [] {
    std::mt19937_64 rng(kSeed + 3);
    double mismatches = 0;
    for (unsigned deg = 0; deg <= 20; ++deg) {
      const auto p = random_exact_poly(rng, deg);
      const auto c = random_rational(rng) * ExactComplex(Rational(1, 20));
      mismatches += !(taylor_shift(taylor_shift(p, c), -c) == p);
    }
    return mismatches;
  });

  // Literal contract. Storing the intermediate shift in double precision costs
  // about eps * (1 + |c|)^degree, far above this tolerance at degree 20, |c| = 2.
  rep.run(g, "taylor shift round trip floating degree <= 20, |c| <= 2", tol.get("algebra.taylor_shift"), [] {
    std::mt19937_64 rng(kSeed + 4);
    double worst = 0.0;
    for (unsigned deg = 0; deg <= 20; ++deg) {
      for (int t = 0; t < 4; ++t) {
        const auto p = random_poly(rng, deg);
        const Complex c = random_complex(rng, 2.0);
        worst = std::max(worst, max_coeff_distance(taylor_shift(taylor_shift(p, c), -c), p) / max_abs_coeff(p));
      }
    }
    return worst;
  });

  return rep;
}

VerificationReport run_pairing(const ToleranceConfig& tol) {
  VerificationReport rep{"pairing", {}};
  const std::string g = "pairing";
  const std::string c = "catalog";

  rep.run(g, "biorthonormality n,m <= 30", 0.0, [] {
    double mismatches = 0;
    for (unsigned n = 0; n <= 30; ++n)
      for (unsigned m = 0; m <= 30; ++m) {
        const auto v = pair_phi_psi_exact(n, m);
        const bool ok = n == m ? (v.radical().is_one() && v.part() == ExactComplex(1)) : v.is_zero();
        mismatches += !ok;
      }
    return mismatches;
  });

  rep.run(g, "biorthonormality floating n,m <= 30", tol.get("pairing.biorthonormality"), [] {
    double worst = 0.0;
    for (unsigned n = 0; n <= 30; ++n)
      for (unsigned m = 0; m <= 30; ++m)
        worst = std::max(worst, std::abs(pair_phi_psi(n, m).value - Complex(n == m ? 1.0 : 0.0, 0.0)));
    return worst;
  });

  rep.run(g, "quadrature pairing matches Gaussian moments n <= 12", tol.get("pairing.moments"), [] {
    double worst = 0.0;
    for (double sigma : {0.95, 1.0, 1.05}) {
      const auto f = gaussian_f_sigma(sigma);
      for (unsigned n = 0; n <= 12; ++n) {
        const double exact = gaussian_moment(sigma, n) * inv_sqrt_factorial(n);
        const double got = std::abs(pair_fn_poly(f, phi_n(n)).value - exact);
        worst = std::max(worst, exact != 0.0 ? got / std::abs(exact) : got);
      }
    }
    return worst;
  });

  rep.run(g, "antilinearity in the first slot", tol.get("pairing.antilinearity"), [] {
    std::mt19937_64 rng(kSeed + 5);
    double worst = 0.0;
    for (const auto& f : {gaussian_f_sigma(1.0), hermite_fn(2)}) {
      for (int t = 0; t < 5; ++t) {
        const Complex a = random_complex(rng, 3.0);
        const auto p = random_poly(rng, 6);
        const Complex lhs = pair_fn_poly(scaled(a, f), p).value;
        const Complex rhs = std::conj(a) * pair_fn_poly(f, p).value;
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300));
      }
    }
    return worst;
  });

  const double target = 1.0 / (2.0 * std::sqrt(std::numbers::pi));
  rep.run(g, "quasi-basis error non-increasing (f_1, f_1), N <= 60", tol.get("pairing.monotone_slack"), [&] {
    const auto f = gaussian_f_sigma(1.0);
    const auto s = quasi_basis_partial_sum(f, f, 60);
    double worst = 0.0;
    for (std::size_t n = 1; n < s.partial_sums.size(); ++n) {
      const double before = std::abs(s.partial_sums[n - 1] - target);
      const double after = std::abs(s.partial_sums[n] - target);
      worst = std::max(worst, after - before);
    }
    return worst;
  });

  rep.run(g, "quasi-basis mirrored orderings agree, N <= 60", tol.get("pairing.mirror"), [] {
    const auto f1 = gaussian_f_sigma(1.0);
    const auto psi_first = quasi_basis_partial_sum(f1, f1, 60, {}, QuasiBasisOrdering::PsiFirst);
    const auto phi_first = quasi_basis_partial_sum(f1, f1, 60, {}, QuasiBasisOrdering::PhiFirst);
    double worst = 0.0;
    for (std::size_t n = 0; n < psi_first.partial_sums.size(); ++n)
      worst = std::max(worst, std::abs(psi_first.partial_sums[n] - phi_first.partial_sums[n]));
    // Swapping the arguments conjugates every term.
    const auto f = gaussian_f_sigma(0.95);
    const auto h = hermite_fn(2);
    const auto a = quasi_basis_partial_sum(f, h, 60, {}, QuasiBasisOrdering::PsiFirst);
    const auto b = quasi_basis_partial_sum(h, f, 60, {}, QuasiBasisOrdering::PhiFirst);
    for (std::size_t n = 0; n < a.partial_sums.size(); ++n)
      worst = std::max(worst, std::abs(a.partial_sums[n] - std::conj(b.partial_sums[n])));
    return worst;
  });

  rep.run_predicate(g, "non-analytic entry: delta-side sums vanish while <p, f_1> != 0", [] {
    const auto p = nonanalytic_p();
    const auto f = gaussian_f_sigma(1.0);
    const auto s = quasi_basis_partial_sum(p, f, 60);
    if (!s.not_real_analytic) return false;
    for (const auto& v : s.partial_sums)
      if (v != Complex{}) return false;
    const auto direct = line_integral([&](double x) { return std::conj(p.eval_real(x)) * f.eval_real(x); });
    return std::abs(direct.refined_value) > 1e-3;
  });

  rep.run(c, "derivative oracle vs Richardson differences n <= 6", tol.get("catalog.derivative"), [] {
    double worst = 0.0;
    for (const auto& f : analytic_catalog()) {
      double scale = 0.0;
      for (unsigned n = 0; n <= 6; ++n) {
        scale = std::max(scale, std::abs(f.deriv_at_zero(n)));
        const Complex fd = richardson_derivative(f, n, fd_step(n));
        worst = std::max(worst, std::abs(fd - f.deriv_at_zero(n)) / scale);
      }
    }
    return worst;
  });

  rep.run(c, "mgf vs quadrature |w| <= 3", tol.get("catalog.mgf"), [] {
    const Complex ws[] = {{0, 0}, {1, 0}, {-2, 0}, {3, 0}, {0, 2}, {1, 2}, {-1.5, -1.5}, {0, -3}, {2.1, 2.1}};
    double worst = 0.0;
    for (const auto& f : analytic_catalog()) {
      if (!f.has_mgf()) continue;
      const double s = line_scale(f);
      for (const Complex w : ws) {
        const double center = w.real() * s * s / 2.0;
        const auto r = line_integral([&](double y) { return std::exp(w * (center + y)) * f.eval_real(center + y); },
                                     {}, s);
        const Complex exact = f.mgf(w);
        worst = std::max(worst, std::abs(r.refined_value - exact) / std::max(std::abs(exact), 1.0));
      }
    }
    return worst;
  });

  rep.run(c, "G entries decay under exp(kx) at |x| = 20", tol.get("catalog.decay"), [] {
    const Complex ks[] = {{1, 0}, {-1, 0}, {0, 2}, {0, -2}, {3, 1}};
    double worst = 0.0;
    for (const auto& f : analytic_catalog()) {
      if (!f.flags().exp_stable) continue;
      for (const Complex k : ks)
        for (double x : {-20.0, 20.0}) worst = std::max(worst, std::abs(std::exp(k * x) * f.eval_real(x)));
    }
    return worst;
  });

  rep.run(c, "Taylor reconstruction |x| <= 2, N = 60", tol.get("catalog.taylor"), [] {
    double worst = 0.0;
    for (const auto& f : analytic_catalog()) {
      if (!f.flags().real_analytic_schwartz()) continue;
      for (int i = 0; i <= 40; ++i) {
        const double x = -2.0 + 0.1 * i;
        ComplexCompensatedSum acc;
        double coeff = 1.0;  // x^n / n!
        for (unsigned n = 0; n <= 60; ++n) {
          acc.add(coeff * f.deriv_at_zero(n));
          coeff *= x / (n + 1.0);
        }
        worst = std::max(worst, std::abs(acc.value() - f.eval_real(x)));
      }
    }
    return worst;
  });

  rep.run_predicate(c, "membership flags consistent with oracles", [] {
    std::vector<TestFunction> all = analytic_catalog();
    all.push_back(nonanalytic_p());
    for (unsigned n = 0; n <= 3; ++n) all.push_back(monomial(n));
    for (const auto& f : all) {
      if (f.flags().real_analytic_schwartz() && !f.has_continuation()) return false;
      if (f.flags().exp_stable && !f.has_mgf()) return false;
      for (unsigned n = 0; n <= 40; ++n) {
        const Complex d = f.deriv_at_zero(n);
        if (!std::isfinite(d.real()) || !std::isfinite(d.imag())) return false;
      }
    }
    return true;
  });

  return rep;
}

VerificationReport run_bicoherent(const ToleranceConfig& tol) {
  VerificationReport rep{"bicoherent", {}};
  const std::string g = "bicoherent";

  rep.run(g, "F_phi series (N = 64) vs closed form, |z| <= 2", tol.get("bicoherent.series"), [] {
    double worst = 0.0;
    for (const auto& f : gaussians())
      for (const Complex z : disc_points(2.0))
        worst = std::max(worst, std::abs(f_phi_series(f, z, 64).value - f_phi(f, z).value));
    return worst;
  });

  rep.run(g, "F_psi series (N = 64) vs closed form, |z| <= 2", tol.get("bicoherent.series"), [] {
    double worst = 0.0;
    for (const auto& f : gaussians())
      for (const Complex z : disc_points(2.0))
        worst = std::max(worst, std::abs(f_psi_series(f, z, 64).value - f_psi(f, z).value));
    return worst;
  });

  rep.run(g, "conjugation convention: F_phi[f_1](1+i) = exp(-1-i)", tol.get("bicoherent.series"), [] {
    const auto f = gaussian_f_sigma(1.0);
    const Complex z(1.0, 1.0);
    const Complex expected = std::exp(Complex(-1.0, -1.0));
    return std::max(std::abs(f_phi(f, z).value - expected),
                    std::abs(f_phi(f, z, {}, EvalPath::Quadrature).value - expected));
  });

  const double grid5[] = {-1.5, -0.75, 0.0, 0.75, 1.5};
  rep.run(g, "weak eigenvalue residual (phi side), 5x5 grid", tol.get("bicoherent.weak_eigen"), [&] {
    double worst = 0.0;
    for (const auto& f : analytic_catalog())
      for (double a : grid5)
        for (double b : grid5) worst = std::max(worst, weak_eigen_phi_residual(f, Complex(a, b)));
    return worst;
  });

  rep.run(g, "weak eigenvalue residual (psi side), 5x5 grid", tol.get("bicoherent.weak_eigen_psi"), [&] {
    auto fs = analytic_catalog();
    fs.push_back(monomial(1));
    fs.push_back(monomial(3));
    double worst = 0.0;
    for (const auto& f : fs)
      for (double a : grid5)
        for (double b : grid5) worst = std::max(worst, weak_eigen_psi_residual(f, Complex(a, b)));
    return worst;
  });

  rep.run(g, "rotation/scaling ratio |F_psi[f_s]| / |F_phi[f_1/s]| constant", tol.get("bicoherent.rotation"), [] {
    const GridSpec grid{};
    double worst = 0.0;
    for (double sigma : {0.95, 1.05, 1.2}) {
      const auto fs = gaussian_f_sigma(sigma);
      const auto finv = gaussian_f_sigma(1.0 / sigma);
      std::vector<double> ratios;
      for (unsigned j = 0; j < grid.n_im; j += 4)
        for (unsigned i = 0; i < grid.n_re; i += 4) {
          const double a = grid.re(i);
          const double b = grid.im(j);
          const double den = std::abs(f_phi(finv, Complex(b, a)).value);
          if (den > 1e-12) ratios.push_back(std::abs(f_psi(fs, Complex(a, b)).value) / den);
        }
      double mean = 0.0;
      for (double r : ratios) mean += r;
      mean /= ratios.size();
      double var = 0.0;
      for (double r : ratios) var += (r - mean) * (r - mean);
      worst = std::max(worst, std::sqrt(var / ratios.size()) / mean);
    }
    return worst;
  });

  const double slack = tol.get("bicoherent.monotone_slack");
  const GridSpec grid{};
  // Largest increase when walking away from the line im = 0 (axis 0) or re = 0 (axis 1).
  auto decay_violation = [&](const Eigen::MatrixXd& m, int axis) {
    double worst = 0.0;
    const unsigned centre_j = (grid.n_im - 1) / 2;
    const unsigned centre_i = (grid.n_re - 1) / 2;
    if (axis == 0) {
      for (unsigned i = 0; i < grid.n_re; ++i) {
        for (unsigned j = centre_j + 1; j < grid.n_im; ++j) worst = std::max(worst, m(j, i) - m(j - 1, i));
        for (unsigned j = centre_j; j-- > 0;) worst = std::max(worst, m(j, i) - m(j + 1, i));
      }
    } else {
      for (unsigned j = 0; j < grid.n_im; ++j) {
        for (unsigned i = centre_i + 1; i < grid.n_re; ++i) worst = std::max(worst, m(j, i) - m(j, i - 1));
        for (unsigned i = centre_i; i-- > 0;) worst = std::max(worst, m(j, i) - m(j, i + 1));
      }
    }
    return worst;
  };

  rep.run(g, "phi grid decays along |Im z| (sigma = 0.95)", slack, [&] {
    return decay_violation(grid_eval(StateKind::Phi, gaussian_f_sigma(0.95), grid), 0);
  });
  rep.run(g, "psi grid decays along |Re z| (sigma = 0.95)", slack, [&] {
    return decay_violation(grid_eval(StateKind::Psi, gaussian_f_sigma(0.95), grid), 1);
  });
  rep.run(g, "phi grid ridge |F_phi| = 1 on the real axis (sigma = 1)", tol.get("bicoherent.ridge"), [&] {
    const auto m = grid_eval(StateKind::Phi, gaussian_f_sigma(1.0), grid);
    const unsigned j0 = (grid.n_im - 1) / 2;
    double worst = std::abs(grid.im(j0));
    for (unsigned i = 0; i < grid.n_re; ++i) worst = std::max(worst, std::abs(m(j0, i) - 1.0));
    return worst;
  });

  rep.run(g, "ordinary CS |<Phi(z), f_1>| even under z -> -z", tol.get("bicoherent.symmetry"), [] {
    GridSpec small{-3, 3, -3, 3, 25, 25};
    const auto m = grid_eval(StateKind::Cs, gaussian_f_sigma(1.0), small);
    return (m - m.reverse()).cwiseAbs().maxCoeff();
  });

  rep.run(g, "ordinary CS grid decays along |Re z| and |Im z| (sigma = 1)", slack, [&] {
    const auto m = grid_eval(StateKind::Cs, gaussian_f_sigma(1.0), grid);
    return std::max(decay_violation(m, 0), decay_violation(m, 1));
  });

  rep.run_predicate(g, "grid values independent of thread count", [] {
    GridSpec small{-2, 2.5, -1, 3, 17, 13};
    const auto f = gaussian_f_sigma(1.05);
    for (auto state : {StateKind::Phi, StateKind::Psi, StateKind::Cs}) {
      const auto a = grid_eval(state, f, small, {}, 1);
      const auto b = grid_eval(state, f, small, {}, 4);
      if (a != b) return false;
    }
    return true;
  });

  return rep;
}

VerificationReport run_identities(const ToleranceConfig& tol) {
  VerificationReport rep{"identities", {}};
  const std::string g = "identities";

  rep.run(g, "resolution of the identity, both orderings, Gaussian pairs", tol.get("identities.resolution"), [] {
    double worst = 0.0;
    const auto gs = gaussians();
    for (const auto& f : gs)
      for (const auto& h : gs) {
        const auto r = check_resolution_identity(f, h);
        worst = std::max({worst, r.error_phi_psi, r.error_psi_phi});
      }
    const auto r = check_resolution_identity(gaussian_f_sigma(1.0), hermite_fn(1));
    return std::max({worst, r.error_phi_psi, r.error_psi_phi, std::abs(r.reference)});
  });

  rep.run_predicate(g, "domain guard rejects sigma outside (1/s_max, s_max), s_max = sqrt(1+sqrt2)", [] {
    const double smax = std::sqrt(1.0 + std::sqrt(2.0));
    for (double sigma : {smax, 1.6, 2.0, 1.0 / smax, 0.5}) {
      const auto f = gaussian_f_sigma(sigma);
      try {
        check_resolution_identity(f, f);
        return false;
      } catch (const DomainError&) {
      }
    }
    const auto inside = gaussian_f_sigma(1.4);
    check_resolution_identity(inside, inside);
    return true;
  });

  rep.run(g, "complex-delta monomials n <= 10 at x in {0.5, 1.3, 2}", tol.get("identities.complex_delta"), [] {
    double worst = 0.0;
    for (unsigned n = 0; n <= 10; ++n)
      for (double x : {0.5, 1.3, 2.0})
        worst = std::max(worst, std::abs(complex_delta_transform(monomial(n), x).value - std::pow(x, n)));
    return worst;
  });

  rep.run(g, "complex-delta exp(-x^2) on [-2, 2]", tol.get("identities.complex_delta"), [] {
    const auto f = gaussian_exp_minus_x2();
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
      const double x = -2.0 + 0.2 * i;
      worst = std::max(worst, std::abs(complex_delta_transform(f, x).value - std::exp(-x * x)));
    }
    return worst;
  });

  auto moment_error = [](unsigned k, unsigned l) {
    unsigned m = 2 * (k + l) + 2;
    m += m % 2;
    const Complex v = polar_sum(
        [&](Complex z) {
          Complex r(1.0, 0.0);
          for (unsigned i = 0; i < k; ++i) r *= z;
          for (unsigned i = 0; i < l; ++i) r *= std::conj(z);
          return r;
        },
        std::max(k + l + 2, 4u), std::max(m, 4u));
    return std::abs(v - Complex(k == l ? std::tgamma(k + 1.0) : 0.0, 0.0));
  };

  // Literal contract: absolute error on values up to 10! ~ 3.6e6, below the
  // spacing of doubles there.
  rep.run(g, "polar moments k,l <= 10, absolute error", tol.get("quadrature.moments"), [&] {
    double worst = 0.0;
    for (unsigned k = 0; k <= 10; ++k)
      for (unsigned l = 0; l <= 10; ++l) worst = std::max(worst, moment_error(k, l));
    return worst;
  });

  rep.run(g, "polar moments k,l <= 10, relative to Gamma((k+l)/2 + 1)", tol.get("quadrature.moments"), [&] {
    double worst = 0.0;
    for (unsigned k = 0; k <= 10; ++k)
      for (unsigned l = 0; l <= 10; ++l)
        worst = std::max(worst, moment_error(k, l) / std::tgamma((k + l) / 2.0 + 1.0));
    return worst;
  });

  rep.run(g, "refinement: discrepancy drops >= 10x per doubling until the floor", 1.0, [&] {
    const double floor = tol.get("quadrature.floor");
    const auto f1 = gaussian_f_sigma(1.0);
    const auto f105 = gaussian_f_sigma(1.05);
    const auto x3 = monomial(3);
    std::vector<std::function<Complex(const QuadratureSpec&)>> cases = {
        [&](const QuadratureSpec& s) {
          return line_integral([&](double x) { return std::exp(x) * f1.eval_real(x); }, s, line_scale(f1))
              .value;
        },
        [&](const QuadratureSpec& s) { return check_resolution_identity(f105, f1, s).phi_psi.value; },
        [&](const QuadratureSpec& s) { return check_resolution_identity(f1, f105, s).psi_phi.value; },
        [&](const QuadratureSpec& s) { return complex_delta_transform(x3, 1.3, s).value; },
    };
    double worst = 0.0;
    for (const auto& integral : cases) {
      QuadratureSpec s{8, 8, 8, 2.0};
      std::vector<Complex> values;
      for (int level = 0; level < 5; ++level) {
        values.push_back(integral(s));
        s = s.refined();
      }
      const double scale = std::max(1.0, std::abs(values.back()));
      for (std::size_t i = 2; i < values.size(); ++i) {
        const double prev = std::abs(values[i - 1] - values[i - 2]);
        const double next = std::abs(values[i] - values[i - 1]);
        worst = std::max(worst, next / std::max(prev / 10.0, floor * scale));
      }
    }
    return worst;
  });

  rep.run_predicate(g, "quadrature is bit-reproducible", [] {
    const auto f = gaussian_f_sigma(1.05);
    const auto a = check_resolution_identity(f, f);
    const auto b = check_resolution_identity(f, f);
    const auto c = complex_delta_transform(gaussian_exp_minus_x2(), 0.8);
    const auto d = complex_delta_transform(gaussian_exp_minus_x2(), 0.8);
    return a.phi_psi.value == b.phi_psi.value && a.psi_phi.value == b.psi_phi.value && c.value == d.value;
  });

  return rep;
}

VerificationReport run_displacement(const ToleranceConfig& tol) {
  VerificationReport rep{"displacement", {}};
  const std::string g = "displacement";

  rep.run(g, "h_recursive == h_closed exact, n <= 20, 50 random z", 0.0, [] {
    std::mt19937_64 rng(kSeed + 6);
    double mismatches = 0;
    for (int t = 0; t < 50; ++t) {
      const ExactComplex z = random_rational(rng) * ExactComplex(Rational(1, 20));
      for (unsigned n = 0; n <= 20; ++n) mismatches += !(h_recursive(n, z) == h_closed(n, z));
    }
    return mismatches;
  });

  rep.run_predicate(g, "h_n parity: only degrees n, n-2, ... appear", [] {
    const ExactComplex z(Rational(3, 4), Rational(-5, 7));
    for (unsigned n = 0; n <= 20; ++n) {
      const auto h = h_closed(n, z);
      if (h.degree() != static_cast<int>(n)) return false;
      for (unsigned k = 0; k <= n; ++k)
        if ((n - k) % 2 != 0 && !is_zero(h.coeff(k))) return false;
    }
    return true;
  });

  rep.run(g, "V(z) on monomials l <= 6, |z| <= 2, |x| <= 3", tol.get("displacement.v_monomial"), [] {
    double worst = 0.0;
    for (unsigned l = 0; l <= 6; ++l)
      for (const Complex z : disc_points(2.0))
        for (double x : {-3.0, -1.2, 0.0, 0.7, 3.0}) {
          const Complex target = std::pow(x - std::conj(z), static_cast<int>(l)) * std::exp(-std::norm(z) / 2.0) *
                                 std::exp(z * x);
          worst = std::max(worst, std::abs(v_on_monomial(l, z, x) - target) / (1.0 + std::abs(target)));
        }
    return worst;
  });

  rep.run(g, "w_recursive == w_closed, n <= 20, analytic catalog", tol.get("displacement.w"), [] {
    std::mt19937_64 rng(kSeed + 7);
    double worst = 0.0;
    for (const auto& f : analytic_catalog())
      for (int t = 0; t < 4; ++t) {
        const Complex z = random_complex(rng, 2.0);
        for (unsigned n = 0; n <= 20; ++n) {
          const Complex a = w_closed(f, n, z);
          const Complex b = w_recursive(f, n, z);
          if (a == b) continue;
          worst = std::max(worst, std::abs(a - b) / std::abs(a));
        }
      }
    return worst;
  });

  rep.run(g, "commutator power identity exact, n <= 12, degree <= 10", 0.0, [] {
    std::mt19937_64 rng(kSeed + 8);
    double nonzero = 0;
    for (unsigned n = 1; n <= 12; ++n) {
      const ExactComplex z = random_rational(rng) * ExactComplex(Rational(1, 10));
      for (unsigned deg : {0u, 3u, 10u}) nonzero += !commutator_power_check(n, z, random_exact_poly(rng, deg)).is_zero();
    }
    return nonzero;
  });

  rep.run(g, "BCH factorizations of V(z) phi_0 agree, |z| <= 2", tol.get("displacement.bch"), [] {
    double worst = 0.0;
    for (const Complex z : disc_points(2.0))
      for (double x : {-1.0, 0.0, 1.3, 2.0}) {
        const auto t = bch_check_V(z, x);
        const double scale = 1.0 + std::abs(t[0]);
        worst = std::max({worst, std::abs(t[0] - t[1]) / scale, std::abs(t[0] - t[2]) / scale,
                          std::abs(t[1] - t[2]) / scale});
      }
    return worst;
  });

  rep.run(g, "BCH factorizations of W(z) psi_0 agree, |z| <= 2", tol.get("displacement.bch"), [] {
    auto fs = analytic_catalog();
    for (unsigned n = 0; n <= 3; ++n) fs.push_back(monomial(n));
    double worst = 0.0;
    for (const auto& f : fs)
      for (const Complex z : disc_points(2.0)) {
        const auto t = bch_check_W(f, z);
        const double scale = 1.0 + std::abs(t[2]);
        worst = std::max({worst, std::abs(t[0] - t[1]) / scale, std::abs(t[0] - t[2]) / scale,
                          std::abs(t[1] - t[2]) / scale});
      }
    return worst;
  });

  rep.run(g, "W(z) on the delta vacuum equals F_psi", tol.get("displacement.w_vs_fpsi"), [] {
    double worst = 0.0;
    for (const auto& f : analytic_catalog())
      for (const Complex z : disc_points(2.0)) {
        const Complex a = w_weak_action(f, z);
        const Complex b = f_psi(f, z).value;
        worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(b)));
      }
    return worst;
  });

  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra", "pairing", "bicoherent", "identities", "displacement",
                                                 "all"};
  return names;
}

std::optional<VerificationReport> run_suite(const std::string& name, const ToleranceConfig& tol) {
  if (name == "algebra") return run_algebra(tol);
  if (name == "pairing") return run_pairing(tol);
  if (name == "bicoherent") return run_bicoherent(tol);
  if (name == "identities") return run_identities(tol);
  if (name == "displacement") return run_displacement(tol);
  if (name == "all") {
    VerificationReport all{"all", {}};
    all.append(run_algebra(tol));
    all.append(run_pairing(tol));
    all.append(run_bicoherent(tol));
    all.append(run_identities(tol));
    all.append(run_displacement(tol));
    return all;
  }
  return std::nullopt;
}

}  // namespace wpb::verify
