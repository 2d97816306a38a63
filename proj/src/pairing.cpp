#include "wpb/pairing.hpp"

#include <cmath>
#include <limits>

#include "wpb/compensated_sum.hpp"

namespace wpb {

std::string_view to_string(PairingMode mode) noexcept {
  switch (mode) {
    case PairingMode::ExactClosedForm: return "exact-closed-form";
    case PairingMode::Quadrature: return "quadrature";
    case PairingMode::DerivativeOracle: return "derivative-oracle";
  }
  return "?";
}

PairingValue pair_phi_psi(unsigned n, unsigned m) {
  const double sign = m % 2 == 0 ? 1.0 : -1.0;
  const Complex raw = conv_poly_delta<Complex>(n, m, Complex{});
  return {raw * (sign * inv_sqrt_factorial(n) * inv_sqrt_factorial(m)), PairingMode::ExactClosedForm, 0.0};
}

Surd<ExactComplex> pair_phi_psi_exact(unsigned n, unsigned m) {
  ExactComplex raw = conv_poly_delta<ExactComplex>(n, m, ExactComplex{});
  if (m % 2 != 0) raw = -raw;
  return Surd<ExactComplex>(raw) * exact_inv_sqrt_factorial(n) * exact_inv_sqrt_factorial(m);
}

double line_scale(const TestFunction& f) {
  const double s = f.decay_scale();
  return std::isfinite(s) ? s : 1.0;
}

namespace {

void require_schwartz(const TestFunction& f, const char* what) {
  if (!f.flags().schwartz) {
    throw DomainError(std::string(what) + ": '" + f.name() +
                      "' is not flagged rapidly decreasing; the integral form of the pairing is not defined");
  }
}

void check_estimate(const char* what, Complex coarse, Complex refined, double tol) {
  if (std::abs(coarse - refined) > tol * std::max(1.0, std::abs(refined))) {
    throw EstimationError(std::string(what) + ": quadrature refinements disagree", coarse, refined);
  }
}

}  // namespace

PairingValue pair_fn_poly(const TestFunction& f, const Polynomial<Complex>& p, const QuadratureSpec& spec,
                          double tol) {
  require_schwartz(f, "pair_fn_poly");
  const IntegralResult r =
      line_integral([&](double x) { return std::conj(f.eval_real(x)) * p(x); }, spec, line_scale(f));
  check_estimate("pair_fn_poly", r.value, r.refined_value, tol);
  return {r.refined_value, PairingMode::Quadrature, r.discrepancy};
}

PairingValue pair_fn_delta(const TestFunction& f, const DeltaComb<Complex>& d) {
  ComplexCompensatedSum acc;
  for (const auto& [m, c] : d.terms()) {
    const Complex v = std::conj(f.deriv_at_zero(m));
    acc.add(c * (m % 2 == 0 ? v : -v));
  }
  return {acc.value(), PairingMode::DerivativeOracle, 0.0};
}

namespace {

std::vector<Complex> phi_moment_sum(const TestFunction& f, unsigned n, unsigned nodes, double scale) {
  const GaussRule& rule = gauss_hermite_rule(nodes);
  std::vector<ComplexCompensatedSum> acc(n + 1);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = scale * rule.nodes[i];
    Complex term = rule.weights[i] * f.eval_real(x);
    for (unsigned k = 0; k <= n; ++k) {
      acc[k].add(term);
      term *= x / std::sqrt(k + 1.0);
    }
  }
  std::vector<Complex> out(n + 1);
  for (unsigned k = 0; k <= n; ++k) out[k] = scale * acc[k].value();
  return out;
}

}  // namespace

std::vector<Complex> phi_moments(const TestFunction& f, unsigned n, const QuadratureSpec& spec, double tol) {
  require_schwartz(f, "phi_moments");
  if (n > kMaxFloatingIndex) throw RangeError("phi_moments: index exceeds floating cap");
  spec.validate();
  const double s = line_scale(f);
  const auto coarse = phi_moment_sum(f, n, spec.line_nodes, s);
  auto fine = phi_moment_sum(f, n, spec.refined().line_nodes, s);
  for (unsigned k = 0; k <= n; ++k) check_estimate("phi_moments", coarse[k], fine[k], tol);
  return fine;
}

QuasiBasisSum quasi_basis_partial_sum(const TestFunction& f, const TestFunction& g, unsigned N,
                                      const QuadratureSpec& spec, QuasiBasisOrdering ordering,
                                      std::optional<double> stop_tol) {
  QuasiBasisSum out;
  // The delta family is paired with f (PsiFirst) or with g (PhiFirst); that side
  // carries the Taylor expansion at 0.
  const TestFunction& taylor_side = ordering == QuasiBasisOrdering::PsiFirst ? f : g;
  const TestFunction& moment_side = ordering == QuasiBasisOrdering::PsiFirst ? g : f;
  out.not_real_analytic = !taylor_side.flags().real_analytic_schwartz();

  const std::vector<Complex> moments = phi_moments(moment_side, N, spec);  // <phi_n, moment_side>

  ComplexCompensatedSum acc;
  unsigned quiet = 0;
  for (unsigned n = 0; n <= N; ++n) {
    const Complex delta_pair = pair_fn_delta(taylor_side, psi_n(n)).value;  // <taylor_side, psi_n>
    Complex term;
    if (ordering == QuasiBasisOrdering::PsiFirst) {
      term = delta_pair * moments[n];  // <f, psi_n><phi_n, g>
    } else {
      term = std::conj(moments[n]) * std::conj(delta_pair);  // <f, phi_n><psi_n, g>
    }
    const Complex before = acc.value();
    acc.add(term);
    const Complex now = acc.value();
    out.partial_sums.push_back(now);
    if (stop_tol) {
      quiet = std::abs(now - before) < *stop_tol * (1.0 + std::abs(now)) ? quiet + 1 : 0;
      if (quiet >= 3) {
        out.stopped_early = n < N;
        break;
      }
    }
  }
  out.value = out.partial_sums.back();
  return out;
}

}  // namespace wpb
