#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "wpb/scalar.hpp"

namespace wpb {

/// Polynomial in the real variable x, coefficient k multiplying x^k.
///
/// Always stored in canonical form: no trailing zero coefficients, so the zero
/// polynomial has no coefficients at all and degree() == -1.
template <CoefficientScalar Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;

  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }

  static Polynomial monomial(std::size_t degree, Scalar c = from_int<Scalar>(1)) {
    std::vector<Scalar> coeffs(degree + 1);
    coeffs[degree] = std::move(c);
    return Polynomial(std::move(coeffs));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const Scalar> coeffs() const noexcept { return coeffs_; }

  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar{}; }

  /// Horner evaluation; T may be any type Scalar multiplies into (double, Complex, ...).
  template <class T>
  auto operator()(const T& x) const {
    using R = decltype(std::declval<Scalar>() * x);
    R acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c = c * s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial p, const Scalar& s) { return p *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial p) { return p *= s; }
  friend Polynomial operator-(Polynomial p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
      if (wpb::is_zero(p.coeffs_[k])) continue;
      if (!first) os << " + ";
      os << p.coeffs_[k];
      if (k > 0) os << "*x^" << k;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && wpb::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

/// d/dx, coefficient c_k at x^k contributes k*c_k at x^(k-1).
template <CoefficientScalar S>
Polynomial<S> derivative(const Polynomial<S>& p) {
  if (p.degree() < 1) return {};
  std::vector<S> out(static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 1; k <= out.size(); ++k) out[k - 1] = from_int<S>(static_cast<long>(k)) * p.coeff(k);
  return Polynomial<S>(std::move(out));
}

/// Multiplication by x.
template <CoefficientScalar S>
Polynomial<S> times_x(const Polynomial<S>& p) {
  if (p.is_zero()) return {};
  std::vector<S> out(p.coeffs().size() + 1);
  std::copy(p.coeffs().begin(), p.coeffs().end(), out.begin() + 1);
  return Polynomial<S>(std::move(out));
}

/// Largest coefficient-wise distance, measured in the floating backend.
template <CoefficientScalar S>
double max_coeff_distance(const Polynomial<S>& a, const Polynomial<S>& b) {
  const std::size_t n = static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1);
  double d = 0.0;
  for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(to_complex(a.coeff(k) - b.coeff(k))));
  return d;
}

}  // namespace wpb
