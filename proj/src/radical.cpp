#include "wpb/radical.hpp"

#include <algorithm>

namespace wpb {

std::uint64_t SquareFreeRadical::toggle(std::uint64_t p) {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it != primes_.end() && *it == p) {
    primes_.erase(it);
    return p;
  }
  primes_.insert(it, p);
  return 1;
}

mpz_class SquareFreeRadical::absorb(std::uint64_t k) {
  if (k == 0) throw DomainError("square-free radical: factor must be positive");
  mpz_class q = 1;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    while (k % p == 0) {
      k /= p;
      q *= static_cast<unsigned long>(toggle(p));
    }
  }
  if (k > 1) q *= static_cast<unsigned long>(toggle(k));
  return q;
}

mpz_class SquareFreeRadical::absorb(const SquareFreeRadical& other) {
  mpz_class q = 1;
  for (std::uint64_t p : other.primes_) q *= static_cast<unsigned long>(toggle(p));
  return q;
}

mpz_class SquareFreeRadical::radicand() const {
  mpz_class r = 1;
  for (std::uint64_t p : primes_) r *= static_cast<unsigned long>(p);
  return r;
}

}  // namespace wpb
