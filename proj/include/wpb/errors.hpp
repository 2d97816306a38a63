#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace wpb {

/// Index or order outside the representable range (e.g. n! overflowing a double).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A catalog oracle (derivative table, continuation, mgf) cannot answer the request.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two successive quadrature refinements disagree beyond the requested tolerance.
class EstimationError : public std::runtime_error {
 public:
  EstimationError(const std::string& what, std::complex<double> coarse, std::complex<double> refined)
      : std::runtime_error(what), coarse_(coarse), refined_(refined) {}

  std::complex<double> coarse() const noexcept { return coarse_; }
  std::complex<double> refined() const noexcept { return refined_; }

 private:
  std::complex<double> coarse_;
  std::complex<double> refined_;
};

}  // namespace wpb
