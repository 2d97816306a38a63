#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wpb/displacement.hpp"

using namespace wpb;

namespace {

ExactComplex q(long a, long b, long c, long d) { return ExactComplex(Rational(a, b), Rational(c, d)); }

// w_n from its defining sum in exact rationals: z, f^(j)(0) are doubles, hence rationals.
Complex exact_w(const TestFunction& f, unsigned n, Complex zd) {
  const ExactComplex z(Rational(zd.real()), Rational(zd.imag()));
  const ExactComplex zb = conj(z);
  const Rational abs2 = norm(z);
  ExactComplex acc;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const unsigned j = n - 2 * k;
    ExactComplex term(Rational(1));
    for (unsigned t = 0; t < j; ++t) term *= zb;
    Rational c = 1;
    for (unsigned t = 0; t < k; ++t) c *= abs2;
    mpz_class den = mpz_class(1) << k;
    for (unsigned t = 2; t <= j; ++t) den *= t;
    for (unsigned t = 2; t <= k; ++t) den *= t;
    c /= den;
    const Complex d = f.deriv_at_zero(j);
    term *= ExactComplex(Rational(d.real()), Rational(d.imag())) * ExactComplex(k % 2 ? Rational(-c) : c);
    acc += term;
  }
  return acc.to_complex();
}

}  // namespace

TEST_CASE("h_n closed form") {
  const ExactComplex z = q(1, 2, -3, 4);
  CHECK(h_closed(0, z) == Polynomial<ExactComplex>::constant(ExactComplex(1)));
  CHECK(h_closed(1, z) == Polynomial<ExactComplex>({ExactComplex(0), z}));
  const ExactComplex half = q(1, 2, 0, 1);
  CHECK(h_closed(2, z) == Polynomial<ExactComplex>({-(ExactComplex(norm(z)) * half), ExactComplex(0), z * z * half}));
  CHECK(h_recursive(1, q(0, 1, 1, 1)) == Polynomial<ExactComplex>({ExactComplex(0), q(0, 1, 1, 1)}));
  CHECK(h_closed(3, ExactComplex(0)).is_zero());
}

TEST_CASE("h_n recursion equals the closed form") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  for (int t = 0; t < 10; ++t) {
    const ExactComplex z = q(num(rng), den(rng), num(rng), den(rng));
    for (unsigned n = 0; n <= 20; ++n) CHECK(h_recursive(n, z) == h_closed(n, z));
  }
  const Complex zf(0.8, -0.3);
  CHECK(max_coeff_distance(h_recursive(12, zf), h_closed(12, zf)) < 1e-15);
}

TEST_CASE("V(z) on the vacuum and on monomials") {
  for (double x : {-1.0, 0.0, 2.5}) CHECK(v_on_vacuum(0.0, x) == Complex(1.0));
  CHECK(v_on_vacuum(1.0, 1.0).real() == doctest::Approx(std::exp(0.5)).epsilon(1e-14));
  CHECK(std::abs(v_on_vacuum(Complex(1.0, 1.0), -0.5) - oracle::kVacuumAt1PlusI) < 1e-14);
  CHECK(v_on_monomial(0, Complex(0.3, 0.2), 0.9) == v_on_vacuum(Complex(0.3, 0.2), 0.9));
  CHECK(v_on_monomial(1, 1.0, 2.0).real() == doctest::Approx(std::exp(1.5)).epsilon(1e-14));
  CHECK(std::abs(v_on_monomial(3, Complex(0.0, 1.0), 0.0) - Complex(0.0, -std::exp(-0.5))) < 1e-14);
}

TEST_CASE("commutator power identity") {
  const ExactComplex z = q(2, 3, -1, 5);
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(commutator_power_check(n, z, Polynomial<ExactComplex>::constant(ExactComplex(1))).is_zero());
    CHECK(commutator_power_check(n, z, Polynomial<ExactComplex>::monomial(3)).is_zero());
    CHECK(commutator_power_check(n, z, h_closed(10, q(1, 3, 1, 2))).is_zero());
  }
  CHECK_THROWS_AS(commutator_power_check(0, z, Polynomial<ExactComplex>::monomial(1)), DomainError);
}

TEST_CASE("w_n terms") {
  const auto f1 = gaussian_f_sigma(1.0);
  const Complex z(0.6, -1.7);
  CHECK(w_closed(f1, 0, z) == f1.deriv_at_zero(0));
  CHECK(w_closed(f1, 1, z) == Complex(0.0));
  const Complex w2 = (std::conj(z) * std::conj(z) * f1.deriv_at_zero(2) - std::norm(z) * f1.deriv_at_zero(0)) / 2.0;
  CHECK(std::abs(w_closed(f1, 2, z) - w2) < 1e-15);
  CHECK(w_closed(f1, 5, 0.0) == Complex(0.0));
}

TEST_CASE("w_n against an exact rational evaluation") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.4, 1.4);
  for (const auto& f : {gaussian_f_sigma(1.0), hermite_fn(4), gaussian_exp_minus_x2()})
    for (int t = 0; t < 3; ++t) {
      const Complex z(u(rng), u(rng));
      for (unsigned n = 0; n <= 20; ++n) {
        CAPTURE(n);
        const Complex exact = exact_w(f, n, z);
        CHECK(std::abs(w_closed(f, n, z) - exact) <= 1e-14 * std::abs(exact));
        CHECK(std::abs(w_recursive(f, n, z) - exact) <= 1e-14 * std::abs(exact));
      }
    }
}

TEST_CASE("W(z) on the delta vacuum") {
  const auto f1 = gaussian_f_sigma(1.0);
  CHECK(w_weak_action(f1, 0.0) == f1.deriv_at_zero(0));
  CHECK(w_weak_action(f1, 1.0).real() == doctest::Approx(oracle::kWF1AtOne).epsilon(1e-12));
  CHECK(w_weak_action(f1, Complex(0.0, 2.0)).real() == doctest::Approx(oracle::kInvSqrt2Pi).epsilon(1e-10));
}

TEST_CASE("default w truncation grows with the tail") {
  const auto g = gaussian_exp_minus_x2();
  const Complex z(1.99, 0.2);
  CHECK(w_terms_for(g, 0.0) == kDefaultWTerms);
  CHECK(w_terms_for(gaussian_f_sigma(1.0), 0.5) == kDefaultWTerms);
  CHECK(w_terms_for(g, z) > kDefaultWTerms);
  // closed form exp(-|z|^2/2) exp(-conj(z)^2)
  const Complex target = std::exp(-std::norm(z) / 2.0 - std::conj(z) * std::conj(z));
  CHECK(std::abs(w_weak_action(g, z) - target) < 1e-14);
  CHECK(std::abs(w_weak_action(g, z, kDefaultWTerms) - target) > 1e-12);
}

TEST_CASE("BCH factorizations") {
  const auto v0 = bch_check_V(0.0, 0.4);
  for (const auto& v : v0) CHECK(v == Complex(1.0));
  for (const auto& v : bch_check_V(1.0, 1.0)) CHECK(v.real() == doctest::Approx(std::exp(0.5)).epsilon(1e-13));
  const auto vz = bch_check_V(Complex(0.5, -0.5), -1.0);
  const Complex expected = std::exp(-0.25) * std::exp(Complex(-0.5, 0.5));
  for (const auto& v : vz) CHECK(std::abs(v - expected) < 1e-12);

  const auto f1 = gaussian_f_sigma(1.0);
  for (const auto& w : bch_check_W(f1, 0.0)) CHECK(std::abs(w - oracle::kInvSqrt2Pi) < 1e-16);
  for (const auto& w : bch_check_W(f1, 1.0)) CHECK(std::abs(w - oracle::kWF1AtOne) < 1e-12);
  const auto wh = bch_check_W(hermite_fn(0), Complex(0.0, 0.5));
  CHECK(std::abs(wh[0] - wh[1]) < 1e-10);
  CHECK(std::abs(wh[0] - wh[2]) < 1e-10);
  CHECK_THROWS_AS(bch_check_W(nonanalytic_p(), 1.0), DomainError);
}
