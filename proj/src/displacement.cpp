#include "wpb/displacement.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wpb/compensated_sum.hpp"

namespace wpb {
namespace {

// The w_n sums cancel badly: for the Hermite entries at |z| ~ 2 the terms exceed
// |w_n| by ~1e12 at n = 20. Doubles convert to mpf exactly, so with this many bits
// the only rounding left is the final conversion.
constexpr mp_bitcnt_t kWideBits = 256;

struct Wide {
  mpf_class re{0, kWideBits};
  mpf_class im{0, kWideBits};

  Wide() = default;
  explicit Wide(Complex z) : re(z.real(), kWideBits), im(z.imag(), kWideBits) {}

  Complex to_complex() const { return {re.get_d(), im.get_d()}; }

  Wide conj() const {
    Wide w = *this;
    w.im = -w.im;
    return w;
  }
  friend Wide operator*(const Wide& a, const Wide& b) {
    Wide w;
    w.re = a.re * b.re - a.im * b.im;
    w.im = a.re * b.im + a.im * b.re;
    return w;
  }
  friend Wide operator*(const Wide& a, const mpf_class& s) {
    Wide w;
    w.re = a.re * s;
    w.im = a.im * s;
    return w;
  }
  friend Wide operator-(const Wide& a, const Wide& b) {
    Wide w;
    w.re = a.re - b.re;
    w.im = a.im - b.im;
    return w;
  }
  Wide& operator+=(const Wide& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
};

// h_{j+1} = (z x h_j - conj(z) h_j') / (j + 1), summed at x. The partial sums
// cancel down from ~exp(|z||x|) to exp(Re(zx) - |z|^2/2), so this runs in Wide too.
Complex sum_h_terms(const Polynomial<Complex>& h0, Complex z, double x, unsigned N) {
  std::vector<Wide> h;
  for (const Complex& c : h0.coeffs()) h.emplace_back(c);
  if (h.empty()) h.emplace_back();
  const Wide zw(z);
  const Wide zb = zw.conj();
  const mpf_class xw(x, kWideBits);
  auto eval = [&] {
    Wide v;
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
      v = v * xw;
      v += *it;
    }
    return v;
  };
  Wide acc = eval();
  if (z == Complex{}) return acc.to_complex();
  for (unsigned j = 0; j < N; ++j) {
    std::vector<Wide> next(h.size() + 1);
    for (std::size_t k = 0; k < h.size(); ++k) next[k + 1] += zw * h[k];
    for (std::size_t k = 1; k < h.size(); ++k) next[k - 1] = next[k - 1] - zb * h[k] * mpf_class(k, kWideBits);
    const mpf_class inv = mpf_class(1, kWideBits) / mpf_class(j + 1, kWideBits);
    for (auto& c : next) c = c * inv;
    h = std::move(next);
    acc += eval();
  }
  return acc.to_complex();
}

void require_order(const TestFunction& f, unsigned n) {
  if (n > f.max_derivative_order()) {
    throw OracleError("'" + f.name() + "': derivative order " + std::to_string(n) + " unavailable");
  }
}

std::vector<Complex> derivatives(const TestFunction& f, unsigned n) {
  require_order(f, n);
  std::vector<Complex> d(n + 1);
  for (unsigned m = 0; m <= n; ++m) d[m] = f.deriv_at_zero(m);
  return d;
}

}  // namespace

Complex v_on_vacuum(Complex z, double x, unsigned N) {
  require_finite(z, "z");
  require_finite(x, "x");
  return sum_h_terms(Polynomial<Complex>::constant(Complex(1.0, 0.0)), z, x, N);
}

Complex v_on_monomial(unsigned l, Complex z, double x, unsigned N) {
  require_finite(z, "z");
  require_finite(x, "x");
  return sum_h_terms(Polynomial<Complex>::monomial(l, Complex(1.0, 0.0)), z, x, N);
}

namespace {

Wide w_closed_wide(const std::vector<Complex>& d, unsigned n, Complex z) {
  const Wide zb = Wide(z).conj();
  const Wide zw(z);
  const mpf_class abs2 = zw.re * zw.re + zw.im * zw.im;
  std::vector<Wide> zb_pow(n + 1, Wide(Complex(1.0, 0.0)));
  for (unsigned j = 1; j <= n; ++j) zb_pow[j] = zb_pow[j - 1] * zb;
  Wide acc;
  mpf_class abs2_pow(1, kWideBits);
  for (unsigned k = 0; 2 * k <= n; ++k) {
    if (k > 0) abs2_pow *= abs2;
    const unsigned j = n - 2 * k;
    const mpz_class denom = (mpz_class(1) << k) * detail::factorial(j) * detail::factorial(k);
    mpf_class c(abs2_pow, kWideBits);
    c /= mpf_class(denom, kWideBits);
    if (k % 2 != 0) c = -c;
    acc += zb_pow[j] * Wide(d[j]) * c;
  }
  return acc;
}

}  // namespace

Complex w_closed(const TestFunction& f, unsigned n, Complex z) {
  require_finite(z, "z");
  if (z == Complex{}) return n == 0 ? f.deriv_at_zero(0) : Complex{};
  return w_closed_wide(derivatives(f, n), n, z).to_complex();
}

Complex w_recursive(const TestFunction& f, unsigned n, Complex z) {
  require_finite(z, "z");
  if (z == Complex{}) return n == 0 ? f.deriv_at_zero(0) : Complex{};
  const std::vector<Complex> d0 = derivatives(f, n);
  std::vector<Wide> d;
  d.reserve(d0.size());
  for (const Complex& v : d0) d.emplace_back(v);
  const Wide zw(z);
  const Wide zb = zw.conj();
  // After step s only the first n - s entries are still needed.
  for (unsigned s = 0; s < n; ++s) {
    const unsigned len = n - s;
    std::vector<Wide> next(len);
    const mpf_class inv_step = mpf_class(1, kWideBits) / mpf_class(s + 1, kWideBits);
    for (unsigned m = 0; m < len; ++m) {
      Wide v = zb * d[m + 1];
      if (m > 0) v = v - zw * d[m - 1] * mpf_class(m, kWideBits);
      next[m] = v * inv_step;
    }
    d = std::move(next);
  }
  return d[0].to_complex();
}

unsigned w_terms_for(const TestFunction& f, Complex z) {
  require_finite(z, "z");
  const unsigned cap = std::min(f.max_derivative_order(), 4 * kDefaultWTerms);
  if (z == Complex{}) return std::min(kDefaultWTerms, cap);
  // |w_n| <= sum_{j+2k=n} a_j b_k with a_j = |z|^j |f^(j)(0)| / j! and
  // b_k = (|z|^2/2)^k / k!; this also bounds the single-series terms a_n.
  const double r = std::abs(z);
  const double limit = std::ldexp(1.0, -56);
  std::vector<double> a, b;
  double scale = 1.0;
  unsigned small = 0;
  for (unsigned n = 0; n <= cap; ++n) {
    a.push_back(scale * std::abs(f.deriv_at_zero(n)));
    scale *= r / (n + 1.0);
    b.push_back(n == 0 ? 1.0 : b.back() * r * r / (2.0 * n));
    double bound = 0.0;
    for (unsigned k = 0; 2 * k <= n; ++k) bound += a[n - 2 * k] * b[k];
    small = bound <= limit ? small + 1 : 0;
    if (n >= kDefaultWTerms && small >= 3) return n;
  }
  return cap;
}

Complex w_weak_action(const TestFunction& f, Complex z, std::optional<unsigned> terms) {
  require_finite(z, "z");
  if (z == Complex{}) return f.deriv_at_zero(0);
  const unsigned N = terms ? *terms : w_terms_for(f, z);
  const std::vector<Complex> d = derivatives(f, N);
  Wide acc;
  for (unsigned n = 0; n <= N; ++n) acc += w_closed_wide(d, n, z);
  return acc.to_complex();
}

std::array<Complex, 3> bch_check_V(Complex z, double x, unsigned N) {
  require_finite(z, "z");
  require_finite(x, "x");
  const double abs2 = std::norm(z);
  const Complex ezx = std::exp(z * x);

  const Complex direct = v_on_vacuum(z, x, N);

  // e^{-conj(z) D} 1 is the shift of the constant polynomial.
  const auto shifted = taylor_shift(Polynomial<Complex>::constant(Complex(1.0, 0.0)), -std::conj(z));
  const Complex normal_ordered = std::exp(-abs2 / 2.0) * ezx * shifted(x);

  // (1/n!)(-conj(z) D)^n e^{zx} = (1/n!)(-|z|^2)^n e^{zx}
  CompensatedSum series;
  double term = 1.0;
  for (unsigned n = 0; n <= N; ++n) {
    series.add(term);
    term *= -abs2 / (n + 1.0);
  }
  const Complex anti_ordered = std::exp(abs2 / 2.0) * series.value() * ezx;
  return {direct, normal_ordered, anti_ordered};
}

std::array<Complex, 3> bch_check_W(const TestFunction& f, Complex z, std::optional<unsigned> terms) {
  require_finite(z, "z");
  if (!f.has_continuation()) {
    throw DomainError("bch_check_W: '" + f.name() + "' has no analytic continuation");
  }
  const double abs2 = std::norm(z);
  const Complex zb = std::conj(z);
  const Complex closed = std::exp(-abs2 / 2.0) * f.eval_complex(zb);
  if (z == Complex{}) return {closed, closed, closed};

  const unsigned N = terms ? *terms : w_terms_for(f, z);
  const std::vector<Complex> d = derivatives(f, N);

  ComplexCompensatedSum first;
  Complex coeff(1.0, 0.0);  // conj(z)^n / n!
  for (unsigned n = 0; n <= N; ++n) {
    first.add(coeff * d[n]);
    coeff *= zb / (n + 1.0);
  }

  // sum_n conj(z)^n/n! sum_{k<=n} C(n,k) (-z)^(n-k) f^(k)(0)
  ComplexCompensatedSum second;
  coeff = Complex(1.0, 0.0);
  for (unsigned n = 0; n <= N; ++n) {
    ComplexCompensatedSum inner;
    double binom = 1.0;  // C(n, k)
    for (unsigned k = 0; k <= n; ++k) {
      inner.add(binom * std::pow(-z, static_cast<int>(n - k)) * d[k]);
      binom = binom * (n - k) / (k + 1.0);
    }
    second.add(coeff * inner.value());
    coeff *= zb / (n + 1.0);
  }

  return {std::exp(-abs2 / 2.0) * first.value(), std::exp(abs2 / 2.0) * second.value(), closed};
}

}  // namespace wpb
