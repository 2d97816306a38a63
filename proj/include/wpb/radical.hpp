#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <vector>

#include <gmpxx.h>

#include "wpb/delta_comb.hpp"
#include "wpb/polynomial.hpp"
#include "wpb/scalar.hpp"

namespace wpb {

/// sqrt(r) for a square-free positive integer r, kept as its sorted prime factors.
class SquareFreeRadical {
 public:
  SquareFreeRadical() = default;

  /// Replaces sqrt(r) by sqrt(r*k) = q*sqrt(r') with r' square-free; returns q.
  mpz_class absorb(std::uint64_t k);
  mpz_class absorb(const SquareFreeRadical& other);

  bool is_one() const noexcept { return primes_.empty(); }
  mpz_class radicand() const;
  double value() const { return std::sqrt(radicand().get_d()); }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

  friend bool operator==(const SquareFreeRadical&, const SquareFreeRadical&) = default;

 private:
  // Multiplies by the prime p once; returns p if it was already present (pair leaves the radical).
  std::uint64_t toggle(std::uint64_t p);

  std::vector<std::uint64_t> primes_;
};

namespace detail {
inline bool part_is_zero(const ExactComplex& v) { return is_zero(v); }
inline bool part_is_zero(const Polynomial<ExactComplex>& v) { return v.is_zero(); }
inline bool part_is_zero(const DeltaComb<ExactComplex>& v) { return v.empty(); }
}  // namespace detail

/// Exact value part * sqrt(radical), with part carrying rational complex coefficients.
///
/// Canonical: the radical is square-free and reset to 1 whenever the part is zero,
/// so equality is structural.
template <class Part>
class Surd {
 public:
  Surd() = default;
  explicit Surd(Part part) : part_(std::move(part)) {}
  Surd(Part part, SquareFreeRadical radical) : part_(std::move(part)), radical_(std::move(radical)) { canonicalize(); }

  const Part& part() const noexcept { return part_; }
  const SquareFreeRadical& radical() const noexcept { return radical_; }
  bool is_zero() const { return detail::part_is_zero(part_); }

  Surd& multiply_by_sqrt(std::uint64_t k) {
    const mpz_class q = radical_.absorb(k);
    part_ *= ExactComplex(Rational(q));
    canonicalize();
    return *this;
  }

  Surd& divide_by_sqrt(std::uint64_t k) {
    if (k == 0) throw DomainError("division by sqrt(0)");
    multiply_by_sqrt(k);
    part_ *= ExactComplex(Rational(1, k));
    return *this;
  }

  Surd& operator*=(const ExactComplex& s) {
    part_ *= s;
    canonicalize();
    return *this;
  }

  friend Surd operator*(Surd a, const ExactComplex& s) { return a *= s; }
  friend Surd operator*(const ExactComplex& s, Surd a) { return a *= s; }

  friend Surd operator-(const Surd& a, const Surd& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return Surd(-b.part_, b.radical_);
    if (!(a.radical_ == b.radical_)) throw DomainError("subtraction of surds with different radicals");
    return Surd(a.part_ - b.part_, a.radical_);
  }

  friend bool operator==(const Surd& a, const Surd& b) { return a.radical_ == b.radical_ && a.part_ == b.part_; }

  template <class F>
  auto map(F&& f) const -> Surd<decltype(f(std::declval<const Part&>()))> {
    return {f(part_), radical_};
  }

  friend std::ostream& operator<<(std::ostream& os, const Surd& s) {
    os << "sqrt(" << s.radical_.radicand() << ")*[" << s.part_ << ']';
    return os;
  }

 private:
  void canonicalize() {
    if (detail::part_is_zero(part_)) radical_ = SquareFreeRadical{};
  }

  Part part_{};
  SquareFreeRadical radical_{};
};

/// Exact product of two scalar surds.
inline Surd<ExactComplex> operator*(const Surd<ExactComplex>& a, const Surd<ExactComplex>& b) {
  SquareFreeRadical r = a.radical();
  const mpz_class q = r.absorb(b.radical());
  return {a.part() * b.part() * ExactComplex(Rational(q)), r};
}

inline Complex to_complex(const Surd<ExactComplex>& s) { return s.part().to_complex() * s.radical().value(); }

}  // namespace wpb
