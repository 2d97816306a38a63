#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "wpb/errors.hpp"

namespace wpb {

using Complex = std::complex<double>;
using Rational = mpq_class;

/// Complex number with exact rational real and imaginary parts.
struct ExactComplex {
  Rational re;
  Rational im;

  ExactComplex() = default;
  ExactComplex(long v) : re(v), im(0) {}  // NOLINT: implicit like a numeric literal
  ExactComplex(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  ExactComplex& operator/=(const ExactComplex& o) {
    const Rational den = o.re * o.re + o.im * o.im;
    if (den == 0) throw DomainError("exact complex division by zero");
    Rational r = (re * o.re + im * o.im) / den;
    Rational i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return ExactComplex(-a.re, -a.im); }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) { return a.re == b.re && a.im == b.im; }

  Complex to_complex() const { return {re.get_d(), im.get_d()}; }

  friend std::ostream& operator<<(std::ostream& os, const ExactComplex& z) {
    return os << '(' << z.re << ',' << z.im << ')';
  }
};

inline ExactComplex conj(const ExactComplex& z) { return ExactComplex(z.re, -z.im); }
inline Rational norm(const ExactComplex& z) { return z.re * z.re + z.im * z.im; }

inline bool is_zero(const Complex& z) { return z == Complex{}; }
inline bool is_zero(const ExactComplex& z) { return z.re == 0 && z.im == 0; }

inline Complex to_complex(const Complex& z) { return z; }
inline Complex to_complex(const ExactComplex& z) { return z.to_complex(); }

/// Scalars the symbolic containers are templated on.
template <class S>
concept CoefficientScalar = requires(S a, S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

template <CoefficientScalar S>
S from_int(long k) {
  if constexpr (std::same_as<S, Complex>) {
    return Complex(static_cast<double>(k), 0.0);
  } else {
    return S(k);
  }
}

template <CoefficientScalar S>
S conjugate(const S& s) {
  using std::conj;
  return conj(s);
}

/// True for the exact backend; the floating backend enforces the n! overflow cap.
template <class S>
inline constexpr bool is_exact_scalar = std::same_as<S, ExactComplex>;

/// Largest index whose factorial is representable as a double.
inline constexpr unsigned kMaxFloatingIndex = 170;

inline void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace wpb
