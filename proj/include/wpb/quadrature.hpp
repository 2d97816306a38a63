#pragma once

#include <functional>
#include <vector>

#include "wpb/scalar.hpp"

namespace wpb {

/// Node counts for the real-line (Gauss-Hermite) and complex-plane (polar
/// Gauss-Laguerre x trapezoid) rules. Every integral is also evaluated with the
/// refined() spec so that the discrepancy is always visible.
struct QuadratureSpec {
  unsigned line_nodes = 80;
  unsigned radial_nodes = 48;
  unsigned angular_nodes = 64;
  double refine_factor = 2.0;

  /// Throws DomainError unless all node counts are >= 4, angular_nodes is even
  /// and refine_factor > 1.
  void validate() const;
  QuadratureSpec refined() const;
};

struct IntegralResult {
  Complex value;
  Complex refined_value;
  double discrepancy = 0.0;
};

/// Nodes and weights of a Gauss rule. For Hermite the weights have the weight
/// function divided out (w_i exp(t_i^2)), so the rule integrates F directly.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline constexpr unsigned kMaxHermiteNodes = 600;
inline constexpr unsigned kMaxLaguerreNodes = 256;

/// Cached, thread-safe; throws DomainError outside [1, kMax*Nodes].
const GaussRule& gauss_hermite_rule(unsigned n);
const GaussRule& gauss_laguerre_rule(unsigned n);

using LineIntegrand = std::function<Complex(double)>;
using PlaneIntegrand = std::function<Complex(Complex)>;

/// s * sum_i W_i F(s t_i): integral of F over the real line, exact when
/// F(x) = poly(x) exp(-x^2/s^2).
Complex gauss_hermite_sum(const LineIntegrand& f, unsigned nodes, double scale = 1.0);

/// Integral of f over the real line at spec.line_nodes and at the refined count.
IntegralResult line_integral(const LineIntegrand& f, const QuadratureSpec& spec = {}, double scale = 1.0);

/// exp(2 pi i j / m) for j < m (m even), built so that the rotations by -1
/// (and by i when 4 divides m) map nodes onto nodes exactly.
std::vector<Complex> roots_of_unity(unsigned m);

/// (1/M) sum_i w_i sum_j F(sqrt(u_i) exp(2 pi i j / M)).
Complex polar_sum(const PlaneIntegrand& f, unsigned radial_nodes, unsigned angular_nodes);

/// Integral over C of d^2z/pi exp(-|z|^2) F(z); the Gaussian weight is applied
/// by the rule and must not be included in F.
///
/// `growth` is the exponent a of the envelope |F(alpha + i beta)| <= poly *
/// exp(a (alpha^2 - beta^2)); the integral converges absolutely only for
/// |a| < 1 and a DomainError is thrown otherwise.
IntegralResult complex_plane_integral(const PlaneIntegrand& f, const QuadratureSpec& spec = {}, double growth = 0.0);

/// True when a polar evaluation with the given growth exponent is admissible.
bool plane_growth_admissible(double growth) noexcept;

/// Iterated trapezoid rule in Cartesian coordinates, alpha inner and beta outer,
/// still with the exp(-|z|^2) weight applied internally. Handles integrands that
/// are only conditionally integrable in the plane (growth exactly -1) as long as
/// the inner integral decays in beta. The refined value halves the step.
struct CartesianSpec {
  double step = 0.1;
  double half_width = 10.0;
};

IntegralResult complex_plane_integral_cartesian(const PlaneIntegrand& f, const CartesianSpec& spec = {});

}  // namespace wpb
