#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wpb/ladder.hpp"

using namespace wpb;

namespace {

ExactComplex q(long num, long den = 1, long inum = 0, long iden = 1) {
  return ExactComplex(Rational(num, den), Rational(inum, iden));
}

Polynomial<ExactComplex> random_exact(std::mt19937_64& rng, unsigned degree) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 7);
  std::vector<ExactComplex> c(degree + 1);
  for (auto& v : c) v = q(num(rng), den(rng), num(rng), den(rng));
  c.back() = c.back() + ExactComplex(100);
  return Polynomial<ExactComplex>(c);
}

Polynomial<Complex> random_floating(std::mt19937_64& rng, unsigned degree) {
  std::normal_distribution<double> g;
  std::vector<Complex> c(degree + 1);
  for (auto& v : c) v = {g(rng), g(rng)};
  return Polynomial<Complex>(c);
}

}  // namespace

TEST_CASE("polynomials stay canonical") {
  Polynomial<Complex> p({1.0, 2.0, 0.0, 0.0});
  CHECK(p.degree() == 1);
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(Polynomial<Complex>::monomial(3).coeff(3) == Complex(1.0));
  CHECK(derivative(Polynomial<Complex>::constant(5.0)).is_zero());
}

TEST_CASE("delta combs drop cancelled terms") {
  auto d = DeltaComb<Complex>::single(2, 3.0);
  d.add(2, -3.0);
  CHECK(d.empty());
  d.add(1, 1.0);
  d.add(4, 2.0);
  CHECK(d.terms().size() == 2);
  CHECK(d.terms().begin()->first == 1);
}

TEST_CASE("ladder operators on the polynomial family") {
  // a = D, b = q: D x^2/sqrt2 = sqrt2 x = sqrt2 phi_1.
  const auto a_phi2 = apply_to_poly(LadderOp::A, phi_n(2));
  CHECK(a_phi2.degree() == 1);
  CHECK(a_phi2.coeff(1).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(apply_to_poly(LadderOp::A, phi_n(0)).is_zero());
  CHECK(apply_to_poly(LadderOp::ADagger, phi_n(1)).coeff(0).real() == doctest::Approx(-1.0));
  CHECK(adjoint(LadderOp::A) == LadderOp::ADagger);
  CHECK(adjoint(LadderOp::B) == LadderOp::BDagger);
}

TEST_CASE("weak action on delta derivatives") {
  // x delta^(3) = -3 delta^(2),  D delta^(3) = delta^(4)
  const auto d3 = DeltaComb<Complex>::single(3, 1.0);
  CHECK(apply_to_delta(LadderOp::B, d3) == DeltaComb<Complex>::single(2, -3.0));
  CHECK(apply_to_delta(LadderOp::A, d3) == DeltaComb<Complex>::single(4, 1.0));
  CHECK(apply_to_delta(LadderOp::ADagger, d3) == DeltaComb<Complex>::single(4, -1.0));
  CHECK(apply_to_delta(LadderOp::BDagger, DeltaComb<Complex>::single(0, 1.0)).empty());
}

TEST_CASE("exact ladder and eigenvalue relations for k <= 30") {
  for (unsigned k = 0; k <= 30; ++k) {
    CAPTURE(k);
    ExactPhi up = exact_phi_n(k + 1);
    up.multiply_by_sqrt(k + 1);
    CHECK(apply_to_poly(LadderOp::B, exact_phi_n(k)) == up);
    ExactPsi psi_up = exact_psi_n(k + 1);
    psi_up.multiply_by_sqrt(k + 1);
    CHECK(apply_to_delta(LadderOp::ADagger, exact_psi_n(k)) == psi_up);
    if (k > 0) {
      ExactPhi down = exact_phi_n(k - 1);
      down.multiply_by_sqrt(k);
      CHECK(apply_to_poly(LadderOp::A, exact_phi_n(k)) == down);
      ExactPsi psi_down = exact_psi_n(k - 1);
      psi_down.multiply_by_sqrt(k);
      CHECK(apply_to_delta(LadderOp::BDagger, exact_psi_n(k)) == psi_down);
    }
    const auto [rphi, rpsi] = exact_number_op_eigencheck(k);
    CHECK(rphi.is_zero());
    CHECK(rpsi.is_zero());
  }
}

TEST_CASE("floating normalization matches 1/sqrt(n!)") {
  for (unsigned n : {0u, 1u, 5u, 20u, 100u, 170u}) {
    CAPTURE(n);
    const double expected = std::exp(-0.5 * std::lgamma(n + 1.0));
    CHECK(inv_sqrt_factorial(n) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(phi_n(n).coeff(n).real() == doctest::Approx(expected).epsilon(1e-13));
  }
  CHECK(psi_n(3).coeff(3).real() == doctest::Approx(-1.0 / std::sqrt(6.0)));
  CHECK(to_complex(exact_inv_sqrt_factorial(12)).real() == doctest::Approx(1.0 / std::sqrt(479001600.0)));
}

TEST_CASE("floating caps raise range errors") {
  CHECK_THROWS_AS(phi_n(171), RangeError);
  CHECK_THROWS_AS(psi_n(171), RangeError);
  CHECK_THROWS_AS(inv_sqrt_factorial(171), RangeError);
  CHECK_NOTHROW(exact_phi_n(200));
}

TEST_CASE("canonical commutator on random polynomials") {
  std::mt19937_64 rng(7);
  for (unsigned deg : {0u, 1u, 7u, 25u, 50u}) {
    CAPTURE(deg);
    CHECK(commutator_check(random_exact(rng, deg)).is_zero());
    const auto p = random_floating(rng, deg);
    double scale = 0.0;
    for (const auto& c : p.coeffs()) scale = std::max(scale, std::abs(c));
    CHECK(max_coeff_distance(commutator_check(p), Polynomial<Complex>{}) <= 1e-13 * scale);
  }
}

TEST_CASE("taylor shift against the binomial expansion") {
  const Polynomial<Complex> x2({0.0, 0.0, 1.0});
  CHECK(taylor_shift(x2, Complex(0.0)) == x2);
  CHECK(taylor_shift(x2, Complex(1.0)) == Polynomial<Complex>({1.0, 2.0, 1.0}));
  const Complex z(0.3, -1.2);
  CHECK(taylor_shift(Polynomial<Complex>({0.0, 1.0}), -std::conj(z)) ==
        Polynomial<Complex>({-std::conj(z), 1.0}));

  std::mt19937_64 rng(11);
  for (unsigned deg = 0; deg <= 12; ++deg) {
    const auto p = random_exact(rng, deg);
    const ExactComplex c = q(3, 5, -2, 7);
    std::vector<ExactComplex> coeffs(p.coeffs().begin(), p.coeffs().end());
    CHECK(taylor_shift(p, c) == Polynomial<ExactComplex>(oracle::binomial_shift(coeffs, c)));
    CHECK(taylor_shift(taylor_shift(p, c), -c) == p);
  }
}

TEST_CASE("floating taylor shift round trip for moderate shifts") {
  // The floating round trip loses about (1 + |c|)^degree ulps; for |c| <= 0.5
  // and degree <= 20 that stays well inside 1e-9.
  std::mt19937_64 rng(3);
  for (unsigned deg = 0; deg <= 20; ++deg) {
    const auto p = random_floating(rng, deg);
    const Complex c(0.3, -0.35);
    double scale = 0.0;
    for (const auto& v : p.coeffs()) scale = std::max(scale, std::abs(v));
    CHECK(max_coeff_distance(taylor_shift(taylor_shift(p, c), -c), p) <= 1e-9 * scale);
  }
}
