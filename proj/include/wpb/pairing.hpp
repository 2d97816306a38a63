#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "wpb/delta_comb.hpp"
#include "wpb/ladder.hpp"
#include "wpb/polynomial.hpp"
#include "wpb/quadrature.hpp"
#include "wpb/radical.hpp"
#include "wpb/scalar.hpp"
#include "wpb/test_functions.hpp"

// Scalar product convention: <F, G> is antilinear in the first slot and linear
// in the second, for every pairing in this header.

namespace wpb {

enum class PairingMode { ExactClosedForm, Quadrature, DerivativeOracle };

std::string_view to_string(PairingMode mode) noexcept;

struct PairingValue {
  Complex value;
  PairingMode mode = PairingMode::ExactClosedForm;
  /// |coarse - refined| for quadrature values, 0 otherwise.
  double discrepancy = 0.0;
};

/// The convolution (x^n * delta^(m))(x) used by the extended product:
/// 0 if m > n, (-1)^n n! if m == n, (-1)^m n!/(n-m)! x^(n-m) otherwise.
template <CoefficientScalar S>
S conv_poly_delta(unsigned n, unsigned m, const S& x) {
  if constexpr (!is_exact_scalar<S>) {
    if (n > kMaxFloatingIndex) throw RangeError("conv_poly_delta: degree exceeds floating cap");
  }
  if (m > n) return S{};
  S falling = from_int<S>(1);
  for (unsigned k = n - m + 1; k <= n; ++k) falling = falling * from_int<S>(static_cast<long>(k));
  if (m == n) return n % 2 == 0 ? falling : -falling;
  S v = falling;
  for (unsigned k = 0; k < n - m; ++k) v = v * x;
  return m % 2 == 0 ? v : -v;
}

/// <phi_n, psi_m> = delta_{n,m}, assembled from conv_poly_delta(n, m, 0) and the
/// normalizations of both families.
PairingValue pair_phi_psi(unsigned n, unsigned m);
Surd<ExactComplex> pair_phi_psi_exact(unsigned n, unsigned m);

/// <f, p> = integral of conj(f) p over the real line. Requires f in S.
/// Throws EstimationError when the refined quadrature moves by more than
/// tol * max(1, |value|).
PairingValue pair_fn_poly(const TestFunction& f, const Polynomial<Complex>& p, const QuadratureSpec& spec = {},
                          double tol = 1e-10);

/// <f, d> with <f, delta^(m)> = (-1)^m conj(f^(m)(0)), so <f, psi_n> = conj(f^(n)(0))/sqrt(n!).
PairingValue pair_fn_delta(const TestFunction& f, const DeltaComb<Complex>& d);

/// <phi_k, f> for k = 0..n in one quadrature pass (phi_k is real, so this is
/// the integral of phi_k f). Same preconditions and errors as pair_fn_poly.
std::vector<Complex> phi_moments(const TestFunction& f, unsigned n, const QuadratureSpec& spec = {},
                                 double tol = 1e-10);

/// Quadrature scale matched to the decay of f (x scale of exp(-x^2/s^2)).
double line_scale(const TestFunction& f);

enum class QuasiBasisOrdering {
  PsiFirst,  // sum <f, psi_n><phi_n, g>
  PhiFirst,  // sum <f, phi_n><psi_n, g>
};

struct QuasiBasisSum {
  Complex value;
  /// partial_sums[N] is the sum over n <= N.
  std::vector<Complex> partial_sums;
  /// Set when the function paired against the delta family is not real analytic,
  /// so the Taylor-type expansion behind the identity does not apply.
  bool not_real_analytic = false;
  bool stopped_early = false;
};

/// Partial sums of the quasi-basis expansion of <f, g> up to N. With stop_tol
/// set, summation also stops once three consecutive partial sums move by less
/// than stop_tol * (1 + |current|).
QuasiBasisSum quasi_basis_partial_sum(const TestFunction& f, const TestFunction& g, unsigned N,
                                      const QuadratureSpec& spec = {},
                                      QuasiBasisOrdering ordering = QuasiBasisOrdering::PsiFirst,
                                      std::optional<double> stop_tol = std::nullopt);

}  // namespace wpb
