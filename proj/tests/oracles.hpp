#pragma once

// Reference values and brute-force oracles that share no code with the library.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using cplx = std::complex<double>;

// Frozen with mpmath at 30 digits.
inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;
inline constexpr double kPiToMinusQuarter = 0.751125544464942482858703004776;
inline constexpr double kGaussianSelfOverlap = 0.28209479177387814347403972578;     // 1/(2 sqrt(pi))
inline constexpr double kGaussianSelfOverlap105 = 0.268661706451312506231488792654;  // 1/(2 * 1.05 sqrt(pi))
inline constexpr double kOrdinaryCsAtZero = 0.531125966013598457238536524254;        // pi^(-1/4)/sqrt(2)
inline const cplx kFPhiF1At1PlusI{0.198766110346412940628803191344, -0.309559875653112198443912824915};
inline const cplx kVacuumAt1PlusI{0.195815137578068196142878531736, -0.106974297208003042804726484483};
inline constexpr double kWF1AtOne = 0.146762663173739899894314429032;  // e^(-1/2) f_1(1)
inline constexpr double kExpMinus064 = 0.52729242404304855021874832997;
inline const cplx kFPsiF095{0.175883717608455530985676747494, -0.201505200023631019946035106274};  // z = 0.7-1.1i
inline const cplx kFPhiF105{0.189907418121839828850412704857, 0.215709710251817130133662062708};   // z = 0.7-1.1i
inline const cplx kOrdinaryCsF1{0.162973740073077981515711671746, 0.158030474038291920345867343623}; // z = 0.7-1.1i

// E[x^n] for the centred normal of width sigma.
inline double gaussian_moment(double sigma, unsigned n) {
  if (n % 2) return 0.0;
  double m = 1.0;
  for (unsigned k = 1; k < n; k += 2) m *= k * sigma * sigma;
  return m;
}

// f_sigma^(n)(0) = (-1)^(n/2) (n-1)!! / sigma^n * f_sigma(0) for even n.
inline double gaussian_derivative_at_zero(double sigma, unsigned n) {
  if (n % 2) return 0.0;
  double d = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  for (unsigned k = 1; k < n; k += 2) d *= k / (sigma * sigma);
  return (n / 2) % 2 ? -d : d;
}

inline double factorial(unsigned n) {
  double r = 1.0;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

inline mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline cplx ipow(cplx z, unsigned n) {
  cplx r(1.0, 0.0);
  for (unsigned k = 0; k < n; ++k) r *= z;
  return r;
}

// Coefficients of p(x + c) by expanding every (x + c)^k with the binomial theorem.
template <class T>
std::vector<T> binomial_shift(const std::vector<T>& p, const T& c) {
  std::vector<T> q(p.size(), T(0));
  for (unsigned k = 0; k < p.size(); ++k) {
    T cpow(1);
    for (unsigned j = k + 1; j-- > 0;) {
      q[j] += p[k] * T(binomial(k, j).get_d()) * cpow;
      cpow *= c;
    }
  }
  return q;
}

// n-th derivative at 0 by central differences with two Richardson steps.
template <class F>
cplx richardson_derivative(F&& f, unsigned n, double h) {
  auto central = [&](double s) {
    cplx acc = 0.0;
    for (unsigned j = 0; j <= n; ++j) acc += (j % 2 ? -1.0 : 1.0) * binomial(n, j).get_d() * f((n / 2.0 - j) * s);
    return acc / std::pow(s, static_cast<int>(n));
  };
  const cplx a = central(h), b = central(h / 2), c = central(h / 4);
  return (16.0 * ((4.0 * c - b) / 3.0) - (4.0 * b - a) / 3.0) / 15.0;
}

// Composite Simpson on [a, b]; crude but independent of the Gauss rules.
template <class F>
cplx simpson(F&& f, double a, double b, unsigned n = 4000) {
  const double h = (b - a) / n;
  cplx acc = f(a) + f(b);
  for (unsigned i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

}  // namespace oracle
