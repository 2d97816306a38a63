#include "wpb/bicoherent.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "wpb/compensated_sum.hpp"
#include "wpb/ladder.hpp"
#include "wpb/pairing.hpp"

namespace wpb {

std::string_view to_string(EvalPath path) noexcept {
  switch (path) {
    case EvalPath::Series: return "series";
    case EvalPath::ClosedForm: return "closed-form";
    case EvalPath::Quadrature: return "quadrature";
  }
  return "?";
}

std::string_view to_string(StateKind kind) noexcept {
  switch (kind) {
    case StateKind::Phi: return "phi";
    case StateKind::Psi: return "psi";
    case StateKind::Cs: return "cs";
  }
  return "?";
}

std::optional<StateKind> parse_state(std::string_view name) noexcept {
  if (name == "phi") return StateKind::Phi;
  if (name == "psi") return StateKind::Psi;
  if (name == "cs") return StateKind::Cs;
  return std::nullopt;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr unsigned kSeriesStep = 32;

double gauss_prefactor(Complex z) { return std::exp(-std::norm(z) / 2.0); }

IntegralResult shifted_line_integral(const LineIntegrand& f, const QuadratureSpec& spec, double scale,
                                     double center) {
  return line_integral([&](double y) { return f(center + y); }, spec, scale);
}

// Peak of exp(-x^2/s^2 + a x), where the integrand mass sits.
double drift_center(const TestFunction& f, double a) {
  const double s = line_scale(f);
  return a * s * s / 2.0;
}

void require_in_g(const TestFunction& f, const char* what) {
  if (!f.flags().exp_stable) {
    throw DomainError(std::string(what) + ": '" + f.name() + "' is not in the exponentially stable class G");
  }
}

void require_continuation(const TestFunction& f, const char* what) {
  if (!f.has_continuation()) {
    throw DomainError(std::string(what) + ": '" + f.name() + "' has no analytic continuation");
  }
}

// <f, phi(z)> = integral of conj(f) exp(-|z|^2/2) exp(z x), with f given by `values`.
IntegralResult pair_with_phi_state(const TestFunction::RealFn& values, const TestFunction& f, Complex z,
                                   const QuadratureSpec& spec) {
  const double pre = gauss_prefactor(z);
  return shifted_line_integral([&](double x) { return std::conj(values(x)) * (pre * std::exp(z * x)); }, spec,
                               line_scale(f), drift_center(f, z.real()));
}

}  // namespace

BiCoherentEval f_phi(const TestFunction& f, Complex z, const QuadratureSpec& spec, EvalPath path) {
  require_finite(z, "z");
  require_in_g(f, "F_phi");
  BiCoherentEval out{z, {}, path, 0, 0.0};
  const Complex zb = std::conj(z);
  switch (path) {
    case EvalPath::ClosedForm:
      out.value = gauss_prefactor(z) * f.mgf(zb);
      break;
    case EvalPath::Quadrature: {
      const IntegralResult r = shifted_line_integral([&](double x) { return std::exp(zb * x) * f.eval_real(x); },
                                                     spec, line_scale(f), drift_center(f, zb.real()));
      out.value = gauss_prefactor(z) * r.refined_value;
      out.discrepancy = gauss_prefactor(z) * r.discrepancy;
      break;
    }
    case EvalPath::Series:
      return f_phi_series(f, z, std::nullopt, spec);
  }
  return out;
}

BiCoherentEval f_phi_series(const TestFunction& f, Complex z, std::optional<unsigned> N, const QuadratureSpec& spec) {
  require_finite(z, "z");
  require_in_g(f, "F_phi series");
  const Complex zb = std::conj(z);
  unsigned n_terms = N.value_or(kDefaultSeriesTerms);
  const unsigned cap = std::min(kMaxFloatingIndex - 1, 2 * spec.line_nodes - 2);
  if (n_terms > cap) throw RangeError("F_phi series: truncation exceeds " + std::to_string(cap));

  for (;;) {
    const std::vector<Complex> moments = phi_moments(f, n_terms + 1, spec);  // <phi_k, f>
    ComplexCompensatedSum acc;
    Complex power(1.0, 0.0);  // conj(z)^k / sqrt(k!)
    for (unsigned k = 0; k <= n_terms; ++k) {
      acc.add(power * moments[k]);
      power *= zb / std::sqrt(k + 1.0);
    }
    const Complex sum = acc.value();
    const double tail = std::abs(power * moments[n_terms + 1]);
    if (N || tail <= kEps * (1.0 + std::abs(sum)) || n_terms + kSeriesStep > cap) {
      return {z, gauss_prefactor(z) * sum, EvalPath::Series, n_terms, 0.0};
    }
    n_terms += kSeriesStep;
  }
}

BiCoherentEval f_psi(const TestFunction& g, Complex z) {
  require_finite(z, "z");
  require_continuation(g, "F_psi");
  return {z, gauss_prefactor(z) * g.eval_complex(std::conj(z)), EvalPath::ClosedForm, 0, 0.0};
}

BiCoherentEval f_psi_series(const TestFunction& g, Complex z, std::optional<unsigned> N) {
  require_finite(z, "z");
  const Complex zb = std::conj(z);
  const unsigned cap = std::min({kMaxFloatingIndex - 1, g.max_derivative_order() - 1, kDerivativeTableOrder - 1});
  unsigned n_terms = N.value_or(kDefaultSeriesTerms);
  if (n_terms > cap + 1) throw RangeError("F_psi series: truncation exceeds the derivative oracle");

  auto term = [&](unsigned k) {
    // <psi_k, g> = conj(<g, psi_k>) = g^(k)(0)/sqrt(k!)
    const Complex pair = std::conj(pair_fn_delta(g, psi_n(k)).value);
    return std::pow(zb, static_cast<int>(k)) * inv_sqrt_factorial(k) * pair;
  };

  ComplexCompensatedSum acc;
  unsigned k = 0;
  for (;;) {
    for (; k <= n_terms; ++k) acc.add(term(k));
    const Complex sum = acc.value();
    if (N || n_terms + kSeriesStep > cap || std::abs(term(n_terms + 1)) <= kEps * (1.0 + std::abs(sum))) {
      return {z, gauss_prefactor(z) * sum, EvalPath::Series, n_terms, 0.0};
    }
    n_terms += kSeriesStep;
  }
}

BiCoherentEval f_ordinary_cs(const TestFunction& f, Complex z, const QuadratureSpec& spec) {
  require_finite(z, "z");
  const double c0 = std::sqrt(2.0) * z.real();
  const double k = std::sqrt(2.0) * z.imag();
  const double s = f.decay_scale();
  const double inv_s2 = std::isfinite(s) ? 1.0 / (s * s) : 0.0;
  const double scale = 1.0 / std::sqrt(0.5 + inv_s2);
  const double center = c0 * 0.5 / (0.5 + inv_s2);
  const double norm = std::pow(std::numbers::pi, -0.25);
  // conj(Phi(z, x)) f(x)
  const IntegralResult r = shifted_line_integral(
      [&](double x) {
        return norm * std::exp(Complex(-(x - c0) * (x - c0) / 2.0, -k * x)) * f.eval_real(x);
      },
      spec, scale, center);
  return {z, r.refined_value, EvalPath::Quadrature, 0, r.discrepancy};
}

double weak_eigen_phi_residual(const TestFunction& f, Complex z, const QuadratureSpec& spec) {
  require_finite(z, "z");
  require_in_g(f, "weak eigenvalue check");
  const Complex lhs = -pair_with_phi_state(f.parts().eval_real_derivative, f, z, spec).refined_value;
  const Complex rhs = z * pair_with_phi_state(f.parts().eval_real, f, z, spec).refined_value;
  return std::abs(lhs - rhs);
}

double weak_eigen_psi_residual(const TestFunction& g, Complex z) {
  // <h, psi(z)> = conj(F_psi[h](z))
  const Complex lhs = std::conj(f_psi(times_x(g), z).value);
  const Complex rhs = z * std::conj(f_psi(g, z).value);
  return std::abs(lhs - rhs);
}

std::pair<double, double> resolution_growth(const TestFunction& f, const TestFunction& g) {
  return {f.mgf_growth() - g.continuation_growth(), g.mgf_growth() - f.continuation_growth()};
}

ResolutionCheck check_resolution_identity(const TestFunction& f, const TestFunction& g, const QuadratureSpec& spec) {
  for (const TestFunction* h : {&f, &g}) {
    require_continuation(*h, "resolution of the identity");
    if (!h->has_mgf() || !h->flags().schwartz) {
      throw DomainError("resolution of the identity: '" + h->name() + "' needs a closed-form mgf and decay");
    }
  }
  const auto [a1, a2] = resolution_growth(f, g);
  if (!plane_growth_admissible(a1) || !plane_growth_admissible(a2)) {
    throw DomainError("resolution of the identity for (" + f.name() + ", " + g.name() +
                      "): plane integrand not absolutely integrable (growth exponents " + std::to_string(a1) +
                      ", " + std::to_string(a2) + "; for Gaussians sigma must lie in (1/sqrt(1+sqrt2), sqrt(1+sqrt2)))");
  }

  ResolutionCheck out;
  const double sf = line_scale(f);
  const double sg = line_scale(g);
  const double scale = 1.0 / std::sqrt(1.0 / (sf * sf) + 1.0 / (sg * sg));
  out.reference =
      line_integral([&](double x) { return std::conj(f.eval_real(x)) * g.eval_real(x); }, spec, scale).refined_value;

  out.phi_psi = complex_plane_integral(
      [&](Complex z) {
        const Complex zb = std::conj(z);
        return std::conj(f.mgf(zb)) * g.eval_complex(zb);
      },
      spec, a1);
  out.psi_phi = complex_plane_integral(
      [&](Complex z) {
        const Complex zb = std::conj(z);
        return std::conj(f.eval_complex(zb)) * g.mgf(zb);
      },
      spec, a2);
  out.error_phi_psi = std::abs(out.phi_psi.refined_value - out.reference);
  out.error_psi_phi = std::abs(out.psi_phi.refined_value - out.reference);
  return out;
}

ComplexDeltaResult complex_delta_transform(const TestFunction& g, double x, const QuadratureSpec& spec,
                                           const CartesianSpec& cartesian) {
  require_finite(x, "x");
  require_continuation(g, "complex delta transform");
  const PlaneIntegrand integrand = [&](Complex z) { return std::exp(z * x) * g.eval_complex(std::conj(z)); };
  const double growth = -g.continuation_growth();
  if (plane_growth_admissible(growth)) {
    const IntegralResult r = complex_plane_integral(integrand, spec, growth);
    return {r.refined_value, r.discrepancy, false};
  }
  if (growth < 0.0) {
    // Decay of g(conj z) only cancels the weight along one axis: iterate the
    // Gaussian-dominated direction first.
    const IntegralResult r = complex_plane_integral_cartesian(integrand, cartesian);
    return {r.refined_value, r.discrepancy, true};
  }
  throw DomainError("complex delta transform: growth of '" + g.name() + "' is not dominated by the Gaussian weight");
}

void GridSpec::validate() const {
  for (double v : {re_min, re_max, im_min, im_max}) require_finite(v, "grid bound");
  if (!(re_min < re_max) || !(im_min < im_max)) throw DomainError("grid: need re_min < re_max and im_min < im_max");
  if (n_re < 2 || n_im < 2) throw DomainError("grid: need at least 2 nodes per axis");
}

Eigen::MatrixXd grid_eval(StateKind state, const TestFunction& f, const GridSpec& grid, const QuadratureSpec& spec,
                          unsigned threads) {
  grid.validate();
  spec.validate();
  switch (state) {
    case StateKind::Phi: require_in_g(f, "phi grid"); break;
    case StateKind::Psi: require_continuation(f, "psi grid"); break;
    case StateKind::Cs: break;
  }

  auto node = [&](Complex z) -> double {
    switch (state) {
      case StateKind::Phi:
        return std::abs(f_phi(f, z, spec, f.has_mgf() ? EvalPath::ClosedForm : EvalPath::Quadrature).value);
      case StateKind::Psi: return std::abs(f_psi(f, z).value);
      case StateKind::Cs: return std::abs(f_ordinary_cs(f, z, spec).value);
    }
    return 0.0;
  };

  Eigen::MatrixXd out(grid.n_im, grid.n_re);
  auto rows = [&](unsigned first, unsigned stride) {
    for (unsigned j = first; j < grid.n_im; j += stride)
      for (unsigned i = 0; i < grid.n_re; ++i) out(j, i) = node(Complex(grid.re(i), grid.im(j)));
  };

  threads = std::max(1u, std::min(threads, grid.n_im));
  if (threads == 1) {
    rows(0, 1);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        rows(t, threads);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace wpb
