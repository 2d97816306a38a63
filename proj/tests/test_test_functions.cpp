#include <doctest.h>

#include "oracles.hpp"
#include "wpb/test_functions.hpp"

using namespace wpb;

TEST_CASE("Gaussian entries") {
  const auto f1 = gaussian_f_sigma(1.0);
  CHECK(f1.eval_real(0.0).real() == doctest::Approx(oracle::kInvSqrt2Pi).epsilon(1e-15));
  CHECK(f1.mgf(0.0) == Complex(1.0));
  CHECK(f1.flags().schwartz);
  CHECK(f1.flags().analytic);
  CHECK(f1.flags().exp_stable);
  for (double sigma : {0.95, 1.0, 1.05, 1.4}) {
    const auto f = gaussian_f_sigma(sigma);
    for (unsigned n = 0; n <= 30; ++n) {
      CAPTURE(n);
      const double expected = oracle::gaussian_derivative_at_zero(sigma, n);
      CHECK(std::abs(f.deriv_at_zero(n) - expected) <= 1e-13 * std::abs(expected));
    }
    const Complex w(0.4, -1.3);
    CHECK(std::abs(f.mgf(w) - std::exp(sigma * sigma * w * w / 2.0)) < 1e-14);
    CHECK(std::abs(f.eval_complex(w) - std::exp(-w * w / (2 * sigma * sigma)) / (sigma * std::sqrt(2 * std::numbers::pi))) <
          1e-15);
  }
  CHECK_THROWS_AS(gaussian_f_sigma(0.0), DomainError);
  CHECK_THROWS_AS(gaussian_f_sigma(-1.0), DomainError);
}

TEST_CASE("Hermite functions") {
  CHECK(hermite_fn(0).eval_real(0.0).real() == doctest::Approx(oracle::kPiToMinusQuarter).epsilon(1e-15));
  CHECK(hermite_fn(1).eval_real(0.0) == Complex(0.0));
  const Complex norm =
      oracle::simpson([](double x) { return std::norm(hermite_fn(0).eval_real(x)); }, -12.0, 12.0);
  CHECK(norm.real() == doctest::Approx(1.0).epsilon(1e-12));

  // Orthonormality of the recurrence values.
  const unsigned n = 6;
  for (unsigned j = 0; j <= n; ++j)
    for (unsigned k = 0; k <= n; ++k) {
      const Complex ip = oracle::simpson(
          [&](double x) {
            const auto e = hermite_functions<double>(n, x);
            return Complex(e[j] * e[k]);
          },
          -14.0, 14.0);
      CHECK(std::abs(ip - Complex(j == k ? 1.0 : 0.0)) < 1e-10);
    }
  // e_2(x) = (2x^2 - 1) pi^(-1/4) exp(-x^2/2) / sqrt2
  const double x = 0.83;
  CHECK(hermite_fn(2).eval_real(x).real() ==
        doctest::Approx((2 * x * x - 1) * oracle::kPiToMinusQuarter * std::exp(-x * x / 2) / std::sqrt(2.0)));
  CHECK_THROWS_AS(hermite_fn(kMaxHermiteIndex + 1), RangeError);
}

TEST_CASE("derivative oracles against Richardson differences") {
  for (const auto& f : {gaussian_f_sigma(0.95), gaussian_f_sigma(1.05), hermite_fn(0), hermite_fn(3), hermite_fn(4),
                        gaussian_exp_minus_x2()}) {
    double scale = 0.0;
    for (unsigned n = 0; n <= 6; ++n) {
      CAPTURE(f.name());
      CAPTURE(n);
      scale = std::max(scale, std::abs(f.deriv_at_zero(n)));
      const Complex fd = oracle::richardson_derivative([&](double t) { return f.eval_real(t); }, n, 0.1);
      CHECK(std::abs(fd - f.deriv_at_zero(n)) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("non-analytic entry") {
  const auto p = nonanalytic_p();
  CHECK(p.eval_real(0.0) == Complex(0.0));
  CHECK(p.eval_real(1.0).real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(p.deriv_at_zero(7) == Complex(0.0));
  CHECK(p.flags().schwartz);
  CHECK_FALSE(p.flags().analytic);
  CHECK_FALSE(p.flags().exp_stable);
  CHECK_FALSE(p.has_continuation());
  CHECK_THROWS_AS(p.eval_complex(1.0), DomainError);
}

TEST_CASE("monomials") {
  CHECK(monomial(0).eval_complex(Complex(3.0, 4.0)) == Complex(1.0));
  CHECK(monomial(3).eval_complex(Complex(2.0, 1.0)) == Complex(2.0, 11.0));
  CHECK(monomial(2).deriv_at_zero(2) == Complex(2.0));
  CHECK(monomial(2).deriv_at_zero(3) == Complex(0.0));
  CHECK_FALSE(monomial(1).flags().schwartz);
  CHECK(monomial(1).flags().analytic);
}

TEST_CASE("exp(-x^2) entry and combinators") {
  const auto g = gaussian_exp_minus_x2();
  CHECK(g.eval_real(0.8).real() == doctest::Approx(oracle::kExpMinus064).epsilon(1e-15));
  CHECK(std::abs(g.mgf(Complex(1.0, 0.5)) - std::sqrt(std::numbers::pi) * std::exp(Complex(1.0, 0.5) * Complex(1.0, 0.5) / 4.0)) < 1e-14);

  const auto s = scaled(Complex(0.0, 2.0), g);
  CHECK(s.eval_real(0.3) == Complex(0.0, 2.0) * g.eval_real(0.3));
  CHECK(s.deriv_at_zero(2) == Complex(0.0, 2.0) * g.deriv_at_zero(2));

  const auto xg = times_x(g);
  CHECK(xg.eval_real(0.5) == 0.5 * g.eval_real(0.5));
  // (x g)^(n)(0) = n g^(n-1)(0)
  CHECK(std::abs(xg.deriv_at_zero(3) - 3.0 * g.deriv_at_zero(2)) < 1e-14);
  CHECK(xg.eval_complex(Complex(0.2, 0.1)) == Complex(0.2, 0.1) * g.eval_complex(Complex(0.2, 0.1)));
}

TEST_CASE("Taylor series reproduce analytic entries on |x| <= 2") {
  for (const auto& f : {gaussian_f_sigma(0.95), hermite_fn(2), gaussian_exp_minus_x2()}) {
    for (double x : {-2.0, -0.7, 0.4, 1.9}) {
      Complex acc = 0.0;
      double c = 1.0;
      for (unsigned n = 0; n <= 60; ++n) {
        acc += c * f.deriv_at_zero(n);
        c *= x / (n + 1);
      }
      CHECK(std::abs(acc - f.eval_real(x)) < 1e-8);
    }
  }
}
