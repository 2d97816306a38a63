#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

#include "wpb/delta_comb.hpp"
#include "wpb/polynomial.hpp"
#include "wpb/radical.hpp"
#include "wpb/scalar.hpp"

namespace wpb {

/// The four ladder operators: A = d/dx, B = x, A_dagger = -d/dx, B_dagger = x.
enum class LadderOp { A, B, ADagger, BDagger };

constexpr LadderOp adjoint(LadderOp op) noexcept {
  switch (op) {
    case LadderOp::A: return LadderOp::ADagger;
    case LadderOp::ADagger: return LadderOp::A;
    case LadderOp::B: return LadderOp::BDagger;
    case LadderOp::BDagger: return LadderOp::B;
  }
  return op;
}

constexpr std::string_view to_string(LadderOp op) noexcept {
  switch (op) {
    case LadderOp::A: return "a";
    case LadderOp::B: return "b";
    case LadderOp::ADagger: return "a_dagger";
    case LadderOp::BDagger: return "b_dagger";
  }
  return "?";
}

template <CoefficientScalar S>
Polynomial<S> apply_to_poly(LadderOp op, const Polynomial<S>& p) {
  switch (op) {
    case LadderOp::A: return derivative(p);
    case LadderOp::ADagger: return -derivative(p);
    case LadderOp::B:
    case LadderOp::BDagger: return times_x(p);
  }
  return p;
}

/// Weak action on delta combs: x*delta^(m) = -m*delta^(m-1), D*delta^(m) = delta^(m+1).
template <CoefficientScalar S>
DeltaComb<S> apply_to_delta(LadderOp op, const DeltaComb<S>& d) {
  DeltaComb<S> out;
  for (const auto& [m, c] : d.terms()) {
    switch (op) {
      case LadderOp::B:
      case LadderOp::BDagger:
        if (m > 0) out.add(m - 1, -(from_int<S>(static_cast<long>(m)) * c));
        break;
      case LadderOp::A: out.add(m + 1, c); break;
      case LadderOp::ADagger: out.add(m + 1, -c); break;
    }
  }
  return out;
}

template <class Part>
Surd<Part> apply_to_poly(LadderOp op, const Surd<Part>& s) {
  return s.map([op](const Part& p) { return apply_to_poly(op, p); });
}

template <class Part>
Surd<Part> apply_to_delta(LadderOp op, const Surd<Part>& s) {
  return s.map([op](const Part& d) { return apply_to_delta(op, d); });
}

using ExactPhi = Surd<Polynomial<ExactComplex>>;
using ExactPsi = Surd<DeltaComb<ExactComplex>>;

/// 1/sqrt(n!) in double precision; throws RangeError for n > 170.
double inv_sqrt_factorial(unsigned n);
/// 1/sqrt(n!) as an exact surd.
Surd<ExactComplex> exact_inv_sqrt_factorial(unsigned n);

/// x^n / sqrt(n!) with the normalization premultiplied. Throws RangeError for n > 170.
Polynomial<Complex> phi_n(unsigned n);
/// (-1)^n delta^(n) / sqrt(n!). Throws RangeError for n > 170.
DeltaComb<Complex> psi_n(unsigned n);

/// Exact counterparts: rational part times sqrt of the square-free part of 1/n!.
ExactPhi exact_phi_n(unsigned n);
ExactPsi exact_psi_n(unsigned n);

/// Returns (N phi_k - k phi_k, N^dagger psi_k - k psi_k) with N = ba = q D.
std::pair<Polynomial<Complex>, DeltaComb<Complex>> number_op_eigencheck(unsigned k);
std::pair<ExactPhi, ExactPsi> exact_number_op_eigencheck(unsigned k);

/// (ab - ba)p - p; the zero polynomial whenever the canonical commutator holds.
template <CoefficientScalar S>
Polynomial<S> commutator_check(const Polynomial<S>& p) {
  const auto ab = apply_to_poly(LadderOp::A, apply_to_poly(LadderOp::B, p));
  const auto ba = apply_to_poly(LadderOp::B, apply_to_poly(LadderOp::A, p));
  return ab - ba - p;
}

/// q(x) = p(x + c), expanded exactly with binomial coefficients.
template <CoefficientScalar S>
Polynomial<S> taylor_shift(const Polynomial<S>& p, const S& c) {
  if (p.is_zero()) return {};
  const auto n = static_cast<std::size_t>(p.degree());
  std::vector<S> out(p.coeffs().begin(), p.coeffs().end());
  // Repeated synthetic division by (x - (-c)) (Horner's shift), O(n^2).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = n - 1; k + 1 > i; --k) out[k] = out[k] + c * out[k + 1];
  return Polynomial<S>(std::move(out));
}

}  // namespace wpb
