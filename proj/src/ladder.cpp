#include "wpb/ladder.hpp"

#include <cmath>
#include <string>

namespace wpb {
namespace {

void check_floating_index(unsigned n, const char* what) {
  if (n > kMaxFloatingIndex) {
    throw RangeError(std::string(what) + ": index " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxFloatingIndex) + " (n! overflows double)");
  }
}

template <class Phi, class Psi, class Scale>
std::pair<Phi, Psi> eigencheck(const Phi& phi, const Psi& psi, const Scale& k) {
  const Phi n_phi = apply_to_poly(LadderOp::B, apply_to_poly(LadderOp::A, phi));
  // N^dagger = a^dagger b^dagger
  const Psi n_psi = apply_to_delta(LadderOp::ADagger, apply_to_delta(LadderOp::BDagger, psi));
  return {n_phi - phi * k, n_psi - psi * k};
}

}  // namespace

double inv_sqrt_factorial(unsigned n) {
  check_floating_index(n, "inv_sqrt_factorial");
  long double r = 1.0L;
  for (unsigned k = 2; k <= n; ++k) r /= std::sqrt(static_cast<long double>(k));
  return static_cast<double>(r);
}

Surd<ExactComplex> exact_inv_sqrt_factorial(unsigned n) {
  Surd<ExactComplex> s(ExactComplex(1));
  for (unsigned k = 2; k <= n; ++k) s.divide_by_sqrt(k);
  return s;
}

Polynomial<Complex> phi_n(unsigned n) {
  check_floating_index(n, "phi_n");
  return Polynomial<Complex>::monomial(n, Complex(inv_sqrt_factorial(n), 0.0));
}

DeltaComb<Complex> psi_n(unsigned n) {
  check_floating_index(n, "psi_n");
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return DeltaComb<Complex>::single(n, Complex(sign * inv_sqrt_factorial(n), 0.0));
}

ExactPhi exact_phi_n(unsigned n) {
  const auto norm = exact_inv_sqrt_factorial(n);
  return {Polynomial<ExactComplex>::monomial(n, norm.part()), norm.radical()};
}

ExactPsi exact_psi_n(unsigned n) {
  const auto norm = exact_inv_sqrt_factorial(n);
  const ExactComplex c = (n % 2 == 0) ? norm.part() : -norm.part();
  return {DeltaComb<ExactComplex>::single(n, c), norm.radical()};
}

std::pair<Polynomial<Complex>, DeltaComb<Complex>> number_op_eigencheck(unsigned k) {
  return eigencheck(phi_n(k), psi_n(k), Complex(static_cast<double>(k), 0.0));
}

std::pair<ExactPhi, ExactPsi> exact_number_op_eigencheck(unsigned k) {
  return eigencheck(exact_phi_n(k), exact_psi_n(k), ExactComplex(static_cast<long>(k)));
}

}  // namespace wpb
