#include "wpb/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "wpb/compensated_sum.hpp"
#include "wpb/test_functions.hpp"

namespace wpb {

void QuadratureSpec::validate() const {
  if (line_nodes < 4 || radial_nodes < 4 || angular_nodes < 4) {
    throw DomainError("quadrature spec: node counts must be at least 4");
  }
  if (angular_nodes % 2 != 0) throw DomainError("quadrature spec: angular_nodes must be even");
  if (!(refine_factor > 1.0) || !std::isfinite(refine_factor)) {
    throw DomainError("quadrature spec: refine_factor must exceed 1");
  }
}

QuadratureSpec QuadratureSpec::refined() const {
  validate();
  auto scale = [this](unsigned n) { return static_cast<unsigned>(std::ceil(n * refine_factor)); };
  QuadratureSpec r = *this;
  r.line_nodes = scale(line_nodes);
  r.radial_nodes = scale(radial_nodes);
  r.angular_nodes = scale(angular_nodes);
  if (r.angular_nodes % 2 != 0) ++r.angular_nodes;
  return r;
}

namespace {

Eigen::VectorXd tridiagonal_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("Golub-Welsch eigenvalue solve failed");
  return es.eigenvalues();
}

GaussRule build_hermite(unsigned n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n > 0 ? n - 1 : 0);
  for (unsigned k = 1; k < n; ++k) sub(k - 1) = std::sqrt(k / 2.0);
  const Eigen::VectorXd guess = tridiagonal_eigenvalues(diag, sub);

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    double t = guess(i);
    std::vector<double> e;
    for (int it = 0; it < 4; ++it) {
      e = hermite_functions(n, t);
      const double dpsi = std::sqrt(2.0 * n) * e[n - 1] - t * e[n];
      t -= e[n] / dpsi;
    }
    // 2 / psi_n'(t)^2 is first-order insensitive to the residual node error.
    e = hermite_functions(n, t);
    const double dpsi = std::sqrt(2.0 * n) * e[n - 1] - t * e[n];
    rule.nodes[i] = t;
    rule.weights[i] = 2.0 / (dpsi * dpsi);
  }
  return rule;
}

void laguerre(unsigned n, double u, double& ln, double& lnm1) {
  double prev = 0.0;
  double cur = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - u) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  ln = cur;
  lnm1 = prev;
}

GaussRule build_laguerre(unsigned n) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 0 ? n - 1 : 0);
  for (unsigned k = 0; k < n; ++k) diag(k) = 2.0 * k + 1.0;
  for (unsigned k = 1; k < n; ++k) sub(k - 1) = k;
  const Eigen::VectorXd guess = tridiagonal_eigenvalues(diag, sub);

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    double u = guess(i);
    double ln = 0.0;
    double lnm1 = 0.0;
    for (int it = 0; it < 4; ++it) {
      laguerre(n, u, ln, lnm1);
      const double dl = n * (ln - lnm1) / u;
      u -= ln / dl;
    }
    // 1 / (u L_n'(u)^2), keeping the L_n term so the node error stays second order.
    laguerre(n, u, ln, lnm1);
    const double dl = n * (ln - lnm1) / u;
    rule.nodes[i] = u;
    rule.weights[i] = 1.0 / (u * dl * dl);
  }
  return rule;
}

const GaussRule& cached(std::map<unsigned, std::unique_ptr<GaussRule>>& cache, unsigned n, unsigned cap,
                        GaussRule (*build)(unsigned), const char* what) {
  if (n < 1 || n > cap) {
    throw DomainError(std::string(what) + ": node count must be in [1, " + std::to_string(cap) + "]");
  }
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(build(n));
  return *slot;
}

}  // namespace

const GaussRule& gauss_hermite_rule(unsigned n) {
  static std::map<unsigned, std::unique_ptr<GaussRule>> cache;
  return cached(cache, n, kMaxHermiteNodes, build_hermite, "gauss_hermite_rule");
}

const GaussRule& gauss_laguerre_rule(unsigned n) {
  static std::map<unsigned, std::unique_ptr<GaussRule>> cache;
  return cached(cache, n, kMaxLaguerreNodes, build_laguerre, "gauss_laguerre_rule");
}

Complex gauss_hermite_sum(const LineIntegrand& f, unsigned nodes, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("line integral scale must be positive");
  const GaussRule& rule = gauss_hermite_rule(nodes);
  ComplexCompensatedSum acc;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc.add(rule.weights[i] * f(scale * rule.nodes[i]));
  return scale * acc.value();
}

IntegralResult line_integral(const LineIntegrand& f, const QuadratureSpec& spec, double scale) {
  spec.validate();
  const QuadratureSpec fine = spec.refined();
  IntegralResult r;
  r.value = gauss_hermite_sum(f, spec.line_nodes, scale);
  r.refined_value = gauss_hermite_sum(f, fine.line_nodes, scale);
  r.discrepancy = std::abs(r.value - r.refined_value);
  return r;
}

std::vector<Complex> roots_of_unity(unsigned m) {
  if (m < 2 || m % 2 != 0) throw DomainError("roots_of_unity: need an even count");
  std::vector<Complex> u(m);
  auto direct = [m](unsigned j) {
    const double theta = 2.0 * std::numbers::pi * j / m;
    return Complex(std::cos(theta), std::sin(theta));
  };
  if (m % 4 == 0) {
    const unsigned q = m / 4;
    for (unsigned j = 0; j < q; ++j) {
      // reflect across the diagonal so that u[q - j] and u[j] are exact swaps
      Complex base = direct(j);
      if (2 * j > q) {
        const Complex mirror = direct(q - j);
        base = Complex(mirror.imag(), mirror.real());
      }
      u[j] = base;
      u[j + q] = Complex(-base.imag(), base.real());
      u[j + 2 * q] = -base;
      u[j + 3 * q] = Complex(base.imag(), -base.real());
    }
  } else {
    const unsigned h = m / 2;
    for (unsigned j = 0; j < h; ++j) {
      Complex base = direct(j);
      if (2 * j > h) {
        const Complex mirror = direct(h - j);
        base = Complex(-mirror.real(), mirror.imag());
      }
      u[j] = base;
      u[j + h] = -base;
    }
  }
  return u;
}

Complex polar_sum(const PlaneIntegrand& f, unsigned radial_nodes, unsigned angular_nodes) {
  const GaussRule& rule = gauss_laguerre_rule(radial_nodes);
  const std::vector<Complex> unit = roots_of_unity(angular_nodes);
  ComplexCompensatedSum acc;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = std::sqrt(rule.nodes[i]);
    const double w = rule.weights[i] / angular_nodes;
    if (w == 0.0) continue;
    for (unsigned j = 0; j < angular_nodes; ++j) acc.add(w * f(r * unit[j]));
  }
  return acc.value();
}

bool plane_growth_admissible(double growth) noexcept {
  return std::isfinite(growth) && std::abs(growth) < 1.0 - 64.0 * std::numeric_limits<double>::epsilon();
}

IntegralResult complex_plane_integral(const PlaneIntegrand& f, const QuadratureSpec& spec, double growth) {
  spec.validate();
  if (!plane_growth_admissible(growth)) {
    throw DomainError("complex-plane integral: growth exponent " + std::to_string(growth) +
                      " leaves the region of absolute convergence |a| < 1");
  }
  const QuadratureSpec fine = spec.refined();
  IntegralResult r;
  r.value = polar_sum(f, spec.radial_nodes, spec.angular_nodes);
  r.refined_value = polar_sum(f, fine.radial_nodes, fine.angular_nodes);
  r.discrepancy = std::abs(r.value - r.refined_value);
  return r;
}

namespace {

Complex cartesian_sum(const PlaneIntegrand& f, double h, double half_width) {
  const long m = std::lround(half_width / h);
  ComplexCompensatedSum outer;
  for (long jb = -m; jb <= m; ++jb) {
    const double beta = jb * h;
    ComplexCompensatedSum inner;
    for (long ja = -m; ja <= m; ++ja) {
      const double alpha = ja * h;
      inner.add(std::exp(-(alpha * alpha + beta * beta)) * f(Complex(alpha, beta)));
    }
    outer.add(inner.value());
  }
  return outer.value() * (h * h / std::numbers::pi);
}

}  // namespace

IntegralResult complex_plane_integral_cartesian(const PlaneIntegrand& f, const CartesianSpec& spec) {
  if (!(spec.step > 0.0) || !(spec.half_width > spec.step)) {
    throw DomainError("cartesian spec: need 0 < step < half_width");
  }
  IntegralResult r;
  r.value = cartesian_sum(f, spec.step, spec.half_width);
  r.refined_value = cartesian_sum(f, spec.step / 2.0, spec.half_width);
  r.discrepancy = std::abs(r.value - r.refined_value);
  return r;
}

}  // namespace wpb
