#pragma once

#include <array>
#include <optional>

#include <gmpxx.h>

#include "wpb/ladder.hpp"
#include "wpb/polynomial.hpp"
#include "wpb/scalar.hpp"
#include "wpb/test_functions.hpp"

// z-bar is always derived from z; no signature takes the two independently.

namespace wpb {

namespace detail {

template <CoefficientScalar S>
S reciprocal(const mpz_class& d) {
  if constexpr (is_exact_scalar<S>) {
    return ExactComplex(Rational(mpz_class(1), d));
  } else {
    return Complex(1.0 / d.get_d(), 0.0);
  }
}

inline mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

template <CoefficientScalar S>
S power(const S& x, unsigned n) {
  S r = from_int<S>(1);
  for (unsigned k = 0; k < n; ++k) r = r * x;
  return r;
}

}  // namespace detail

/// X p = z x p - conj(z) p', the generator of V(z) applied to a polynomial.
template <CoefficientScalar S>
Polynomial<S> displacement_generator(const Polynomial<S>& p, const S& z) {
  return z * apply_to_poly(LadderOp::B, p) - conjugate(z) * apply_to_poly(LadderOp::A, p);
}

/// h_n(x; z) = sum_{k<=n/2} (-1)^k |z|^(2k) z^(n-2k) x^(n-2k) / (2^k (n-2k)! k!).
template <CoefficientScalar S>
Polynomial<S> h_closed(unsigned n, const S& z) {
  if (is_zero(z)) return n == 0 ? Polynomial<S>::constant(from_int<S>(1)) : Polynomial<S>{};
  const S abs2 = z * conjugate(z);
  std::vector<S> coeffs(n + 1);
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const mpz_class denom = (mpz_class(1) << k) * detail::factorial(n - 2 * k) * detail::factorial(k);
    S c = detail::power(abs2, k) * detail::power(z, n - 2 * k) * detail::reciprocal<S>(denom);
    coeffs[n - 2 * k] = k % 2 == 0 ? c : -c;
  }
  return Polynomial<S>(std::move(coeffs));
}

/// h_0 = 1, h_{j+1} = X h_j / (j+1).
template <CoefficientScalar S>
Polynomial<S> h_recursive(unsigned n, const S& z) {
  auto h = Polynomial<S>::constant(from_int<S>(1));
  for (unsigned j = 0; j < n; ++j) h = displacement_generator(h, z) * detail::reciprocal<S>(mpz_class(j + 1));
  return h;
}

/// [X^n, x] p + n conj(z) X^(n-1) p; the zero polynomial when the identity holds.
template <CoefficientScalar S>
Polynomial<S> commutator_power_check(unsigned n, const S& z, const Polynomial<S>& p) {
  if (n == 0) throw DomainError("commutator_power_check: n must be at least 1");
  auto xn = [&](Polynomial<S> q, unsigned times) {
    for (unsigned j = 0; j < times; ++j) q = displacement_generator(q, z);
    return q;
  };
  const Polynomial<S> lhs = xn(times_x(p), n) - times_x(xn(p, n));
  const Polynomial<S> rhs = -(from_int<S>(static_cast<long>(n)) * conjugate(z)) * xn(p, n - 1);
  return lhs - rhs;
}

inline constexpr unsigned kDefaultHTerms = 80;
inline constexpr unsigned kDefaultWTerms = 60;

/// sum_{n<=N} h_n(x; z); equals exp(-|z|^2/2) exp(z x) in the limit.
Complex v_on_vacuum(Complex z, double x, unsigned N = kDefaultHTerms);

/// sum_{n<=N} h_n^[l](x) with h_0^[l] = x^l and the same recursion; equals
/// (x - conj z)^l exp(-|z|^2/2) exp(z x) in the limit.
Complex v_on_monomial(unsigned l, Complex z, double x, unsigned N = kDefaultHTerms);

/// w_n(f; z) = sum_{k<=n/2} (-1)^k |z|^(2k) conj(z)^(n-2k) f^(n-2k)(0) / (2^k (n-2k)! k!).
Complex w_closed(const TestFunction& f, unsigned n, Complex z);

/// w_n from n applications of d_m -> conj(z) d_{m+1} - m z d_{m-1} to the
/// sequence d_m = f^(m)(0), divided by n!.
Complex w_recursive(const TestFunction& f, unsigned n, Complex z);

/// Truncation used by the w-sums when none is given: kDefaultWTerms, extended
/// until an absolute bound on three consecutive |w_n| falls below 2^-56, and
/// capped by the derivative oracle.
unsigned w_terms_for(const TestFunction& f, Complex z);

/// sum_{n<=N} w_n(f; z); equals exp(-|z|^2/2) f(conj z) in the limit.
Complex w_weak_action(const TestFunction& f, Complex z, std::optional<unsigned> N = std::nullopt);

/// The three factorizations of V(z) acting on the vacuum, evaluated at x:
/// {direct series, exp(-|z|^2/2) e^{zq} e^{-conj(z) D}, exp(|z|^2/2) e^{-conj(z) D} e^{zq}}.
std::array<Complex, 3> bch_check_V(Complex z, double x, unsigned N = kDefaultHTerms);

/// The two factorizations of W(z) on the delta vacuum paired with f, and the
/// closed form exp(-|z|^2/2) f(conj z).
std::array<Complex, 3> bch_check_W(const TestFunction& f, Complex z, std::optional<unsigned> N = std::nullopt);

}  // namespace wpb
