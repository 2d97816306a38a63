#pragma once

#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "wpb/quadrature.hpp"
#include "wpb/scalar.hpp"
#include "wpb/test_functions.hpp"

namespace wpb {

enum class EvalPath { Series, ClosedForm, Quadrature };

std::string_view to_string(EvalPath path) noexcept;

struct BiCoherentEval {
  Complex z;
  Complex value;
  EvalPath path = EvalPath::ClosedForm;
  /// Highest index summed (Series only).
  unsigned terms = 0;
  /// Refinement discrepancy (Quadrature only).
  double discrepancy = 0.0;
};

/// F_phi[f](z) = exp(-|z|^2/2) * integral of exp(conj(z) x) f(x) dx.
/// ClosedForm uses the catalog mgf; Quadrature integrates on the real line.
/// The pairing <f, phi(z)> is the complex conjugate of this value.
BiCoherentEval f_phi(const TestFunction& f, Complex z, const QuadratureSpec& spec = {},
                     EvalPath path = EvalPath::ClosedForm);

/// Default series truncation; raised automatically while the next term is still
/// above the rounding level of the sum.
inline constexpr unsigned kDefaultSeriesTerms = 64;

/// exp(-|z|^2/2) sum_{k<=N} conj(z)^k/sqrt(k!) <phi_k, f>.
BiCoherentEval f_phi_series(const TestFunction& f, Complex z, std::optional<unsigned> N = std::nullopt,
                            const QuadratureSpec& spec = {});

/// F_psi[g](z) = exp(-|z|^2/2) g(conj(z)); requires the analytic continuation.
BiCoherentEval f_psi(const TestFunction& g, Complex z);

/// exp(-|z|^2/2) sum_{k<=N} conj(z)^k/sqrt(k!) <psi_k, g>, the Taylor series of g at conj(z).
BiCoherentEval f_psi_series(const TestFunction& g, Complex z, std::optional<unsigned> N = std::nullopt);

/// <Phi(z), f> for the ordinary coherent state
/// Phi(z, x) = pi^(-1/4) exp(-(x - sqrt2 Re z)^2/2 + i sqrt2 Im z x).
BiCoherentEval f_ordinary_cs(const TestFunction& f, Complex z, const QuadratureSpec& spec = {});

/// |-<f', phi(z)> - z <f, phi(z)>|, both pairings by quadrature.
double weak_eigen_phi_residual(const TestFunction& f, Complex z, const QuadratureSpec& spec = {});

/// |<x g, psi(z)> - z <g, psi(z)>| from the closed form of F_psi.
double weak_eigen_psi_residual(const TestFunction& g, Complex z);

/// The two orderings of the resolution of the identity, each an integral over
/// the plane of d^2z/pi, against the line-quadrature value of <f, g>.
struct ResolutionCheck {
  Complex reference;
  IntegralResult phi_psi;  // <f, phi(z)><psi(z), g>
  IntegralResult psi_phi;  // <f, psi(z)><phi(z), g>
  double error_phi_psi = 0.0;
  double error_psi_phi = 0.0;
};

/// Growth exponents of the two plane integrands; both must satisfy |a| < 1.
std::pair<double, double> resolution_growth(const TestFunction& f, const TestFunction& g);

/// Requires mgf and continuation for both inputs; throws DomainError when either
/// integrand leaves the region of absolute convergence.
ResolutionCheck check_resolution_identity(const TestFunction& f, const TestFunction& g,
                                          const QuadratureSpec& spec = {});

struct ComplexDeltaResult {
  Complex value;
  double discrepancy = 0.0;
  /// True when the iterated Cartesian rule was used instead of the polar one.
  bool cartesian = false;
};

/// Integral over C of d^2z/pi exp(-|z|^2) exp(z x) g(conj(z)), which reproduces g(x).
/// Polar quadrature when the growth of g(conj z) is strictly dominated by the
/// weight, the iterated Cartesian rule when it is only marginally dominated.
ComplexDeltaResult complex_delta_transform(const TestFunction& g, double x, const QuadratureSpec& spec = {},
                                           const CartesianSpec& cartesian = {});

enum class StateKind { Phi, Psi, Cs };

std::string_view to_string(StateKind kind) noexcept;
std::optional<StateKind> parse_state(std::string_view name) noexcept;

struct GridSpec {
  double re_min = -3.0;
  double re_max = 3.0;
  double im_min = -3.0;
  double im_max = 3.0;
  unsigned n_re = 121;
  unsigned n_im = 121;

  void validate() const;
  double re(unsigned i) const { return re_min + (re_max - re_min) * i / (n_re - 1); }
  double im(unsigned j) const { return im_min + (im_max - im_min) * j / (n_im - 1); }
};

/// |F_state[f](z)| on the grid; row j is Im z = grid.im(j), column i is Re z = grid.re(i).
/// Rows are distributed over `threads` workers; the result does not depend on it.
Eigen::MatrixXd grid_eval(StateKind state, const TestFunction& f, const GridSpec& grid,
                          const QuadratureSpec& spec = {}, unsigned threads = 1);

}  // namespace wpb
