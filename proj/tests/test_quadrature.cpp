#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "wpb/quadrature.hpp"

using namespace wpb;

TEST_CASE("spec validation and refinement") {
  CHECK_NOTHROW(QuadratureSpec{}.validate());
  CHECK_THROWS_AS((QuadratureSpec{3, 48, 64, 2.0}.validate()), DomainError);
  CHECK_THROWS_AS((QuadratureSpec{80, 48, 63, 2.0}.validate()), DomainError);
  CHECK_THROWS_AS((QuadratureSpec{80, 48, 64, 1.0}.validate()), DomainError);
  const auto r = QuadratureSpec{80, 48, 64, 2.0}.refined();
  CHECK(r.line_nodes == 160);
  CHECK(r.radial_nodes == 96);
  CHECK(r.angular_nodes == 128);
  CHECK(QuadratureSpec{10, 10, 10, 1.5}.refined().angular_nodes % 2 == 0);
}

TEST_CASE("Gauss-Hermite rule integrates Gaussian moments") {
  for (unsigned n : {1u, 5u, 40u, 200u}) {
    const auto& rule = gauss_hermite_rule(n);
    REQUIRE(rule.nodes.size() == n);
    // weights have exp(-t^2) divided out
    double mass = 0.0;
    for (unsigned i = 0; i < n; ++i) mass += rule.weights[i] * std::exp(-rule.nodes[i] * rule.nodes[i]);
    CHECK(mass == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  }
  // x^(2k) exp(-x^2) over R = Gamma(k + 1/2)
  for (unsigned k = 0; k <= 10; ++k) {
    const Complex v = gauss_hermite_sum([&](double x) { return std::pow(x, 2 * k) * std::exp(-x * x); }, 20);
    CHECK(v.real() == doctest::Approx(std::tgamma(k + 0.5)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gauss_hermite_rule(0), DomainError);
  CHECK_THROWS_AS(gauss_hermite_rule(kMaxHermiteNodes + 1), DomainError);
}

TEST_CASE("Gauss-Laguerre rule") {
  const auto& rule = gauss_laguerre_rule(30);
  for (unsigned k = 0; k <= 20; ++k) {
    double acc = 0.0;
    for (unsigned i = 0; i < 30; ++i) acc += rule.weights[i] * std::pow(rule.nodes[i], k);
    CHECK(acc == doctest::Approx(oracle::factorial(k)).epsilon(1e-12));
  }
  double total = 0.0;
  for (double w : gauss_laguerre_rule(kMaxLaguerreNodes).weights) total += w;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("rules are cached and safe to build concurrently") {
  std::vector<const GaussRule*> seen(8);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < 8; ++t) pool.emplace_back([&, t] { seen[t] = &gauss_hermite_rule(137); });
  for (auto& th : pool) th.join();
  for (auto* p : seen) CHECK(p == seen[0]);
}

TEST_CASE("line integrals") {
  const double s = std::sqrt(2.0);
  auto f1 = [](double x) { return Complex(std::exp(-x * x / 2) * oracle::kInvSqrt2Pi); };
  CHECK(line_integral(f1, {}, s).value.real() == doctest::Approx(1.0).epsilon(1e-14));
  const auto e = line_integral([&](double x) { return std::exp(x) * f1(x); }, {}, s);
  CHECK(e.refined_value.real() == doctest::Approx(std::exp(0.5)).epsilon(1e-13));
  CHECK(e.discrepancy == std::abs(e.value - e.refined_value));
  CHECK(std::abs(line_integral([&](double x) { return x * f1(x); }, {}, s).value) < 1e-15);
  CHECK_THROWS_AS(line_integral(f1, {}, 0.0), DomainError);
}

TEST_CASE("roots of unity are closed under the lattice rotations") {
  for (unsigned m : {4u, 12u, 64u, 128u}) {
    const auto r = roots_of_unity(m);
    for (unsigned j = 0; j < m; ++j) {
      CHECK(r[(j + m / 2) % m] == -r[j]);
      CHECK(r[(j + m / 4) % m] == Complex(-r[j].imag(), r[j].real()));
      CHECK(std::abs(r[j] - std::polar(1.0, 2 * std::numbers::pi * j / m)) < 1e-15);
    }
  }
  CHECK_THROWS_AS(roots_of_unity(7), DomainError);
}

TEST_CASE("plane moments with the minimum admissible node counts") {
  for (unsigned k = 0; k <= 6; ++k)
    for (unsigned l = 0; l <= 6; ++l) {
      const unsigned m = std::max(4u, 2 * (k + l) + 2 + (2 * (k + l) + 2) % 2);
      const Complex v = polar_sum([&](Complex z) { return oracle::ipow(z, k) * oracle::ipow(std::conj(z), l); },
                                  std::max(4u, k + l + 2), m);
      CHECK(std::abs(v - Complex(k == l ? oracle::factorial(k) : 0.0)) < 1e-12);
    }
  CHECK(complex_plane_integral([](Complex) { return Complex(1.0); }).value.real() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("plane integral of exp(zx) conj(z)^2 reproduces x^2") {
  const double x = 1.3;
  const auto r = complex_plane_integral([&](Complex z) { return std::exp(z * x) * std::conj(z) * std::conj(z); });
  CHECK(std::abs(r.refined_value - Complex(1.69)) < 1e-12);
}

TEST_CASE("growth guard") {
  CHECK(plane_growth_admissible(0.0));
  CHECK(plane_growth_admissible(0.99));
  CHECK_FALSE(plane_growth_admissible(1.0));
  CHECK_FALSE(plane_growth_admissible(-1.0));
  CHECK_THROWS_AS(complex_plane_integral([](Complex) { return Complex(1.0); }, {}, 1.0), DomainError);
}

TEST_CASE("Cartesian rule agrees with the polar rule") {
  auto f = [](Complex z) { return std::exp(Complex(0.4, 0.0) * z) * std::conj(z) * z; };
  const auto polar = complex_plane_integral(f);
  const auto cart = complex_plane_integral_cartesian(f);
  CHECK(std::abs(polar.refined_value - cart.refined_value) < 1e-10);
  CHECK_THROWS_AS(complex_plane_integral_cartesian(f, {2.0, 1.0}), DomainError);
}

TEST_CASE("bit-identical repetition") {
  auto f = [](Complex z) { return std::exp(z * 0.7) * std::conj(z); };
  const auto a = complex_plane_integral(f);
  const auto b = complex_plane_integral(f);
  CHECK(a.value == b.value);
  CHECK(a.refined_value == b.refined_value);
}
