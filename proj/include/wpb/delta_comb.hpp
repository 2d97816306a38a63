#pragma once

#include <map>
#include <ostream>

#include "wpb/scalar.hpp"

namespace wpb {

/// Finite combination sum_m c_m * delta^(m) of derivatives of the Dirac delta.
///
/// Sorted sparse map from derivative order to coefficient; zero coefficients are
/// never stored, so the empty comb is the zero distribution.
template <CoefficientScalar Scalar>
class DeltaComb {
 public:
  using scalar_type = Scalar;
  using Terms = std::map<unsigned, Scalar>;

  DeltaComb() = default;

  static DeltaComb single(unsigned order, Scalar c) {
    DeltaComb d;
    d.add(order, std::move(c));
    return d;
  }

  bool empty() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }

  Scalar coeff(unsigned order) const {
    auto it = terms_.find(order);
    return it == terms_.end() ? Scalar{} : it->second;
  }

  void add(unsigned order, const Scalar& c) {
    auto [it, inserted] = terms_.try_emplace(order, c);
    if (!inserted) it->second = it->second + c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  DeltaComb& operator+=(const DeltaComb& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  DeltaComb& operator-=(const DeltaComb& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  DeltaComb& operator*=(const Scalar& s) {
    Terms out;
    for (const auto& [m, c] : terms_) {
      Scalar v = c * s;
      if (!is_zero(v)) out.emplace(m, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }

  friend DeltaComb operator+(DeltaComb a, const DeltaComb& b) { return a += b; }
  friend DeltaComb operator-(DeltaComb a, const DeltaComb& b) { return a -= b; }
  friend DeltaComb operator*(DeltaComb d, const Scalar& s) { return d *= s; }
  friend DeltaComb operator*(const Scalar& s, DeltaComb d) { return d *= s; }
  friend DeltaComb operator-(DeltaComb d) {
    for (auto& [m, c] : d.terms_) c = -c;
    return d;
  }
  friend bool operator==(const DeltaComb& a, const DeltaComb& b) { return a.terms_ == b.terms_; }

  friend std::ostream& operator<<(std::ostream& os, const DeltaComb& d) {
    if (d.empty()) return os << "0";
    bool first = true;
    for (const auto& [m, c] : d.terms_) {
      if (!first) os << " + ";
      os << c << "*delta^(" << m << ")";
      first = false;
    }
    return os;
  }

 private:
  Terms terms_;
};

}  // namespace wpb
