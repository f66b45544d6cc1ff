#pragma once

// Finite support sets, their prime exponent maps, and the identification of
// a finite Dirichlet series m(z) = sum_{n in F} c_n n^-z with the polynomial
// p(w) = sum_{n in F} c_n w_1^nu_1(n) ... w_d^nu_d(n), m(z) = p(p_1^-z, ..., p_d^-z).

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "dilbasis/profiles.hpp"

namespace dilbasis {

/// Finite set F of positive integers containing 1, with its ordered prime
/// set p_1 < ... < p_d and the exponent vector of every element.
class SupportSet {
 public:
  /// Factorizes by trial division. Duplicates are merged. Throws
  /// std::invalid_argument if 1 is missing or an entry is not positive.
  explicit SupportSet(std::vector<std::int64_t> elements);

  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  const std::vector<std::int64_t>& primes() const noexcept { return primes_; }
  int dimension() const noexcept { return static_cast<int>(primes_.size()); }

  /// Exponent vector (nu_{p_1}(n), ..., nu_{p_d}(n)) of the element at `index`.
  const std::vector<int>& exponents_at(std::size_t index) const { return exponents_.at(index); }
  /// Exponent vector of element n; throws std::out_of_range if n is not in F.
  const std::vector<int>& exponents(std::int64_t n) const;
  std::size_t index_of(std::int64_t n) const;
  bool contains(std::int64_t n) const noexcept;
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  std::vector<std::int64_t> elements_;
  std::vector<std::int64_t> primes_;
  std::vector<std::vector<int>> exponents_;
};

SupportSet build_support(std::vector<std::int64_t> elements);

/// Coefficients {c_n}_{n in F}, stored in the order of support.elements().
class DirichletPolynomial {
 public:
  DirichletPolynomial(SupportSet support, std::vector<std::complex<double>> coeffs);
  DirichletPolynomial(SupportSet support, std::span<const double> real_coeffs);

  const SupportSet& support() const noexcept { return support_; }
  std::span<const std::complex<double>> coeffs() const noexcept { return coeffs_; }
  std::complex<double> coeff(std::int64_t n) const { return coeffs_[support_.index_of(n)]; }
  int dimension() const noexcept { return support_.dimension(); }

 private:
  SupportSet support_;
  std::vector<std::complex<double>> coeffs_;
};

/// p(w) at w = (e^{i theta_1}, ..., e^{i theta_d}). Throws std::invalid_argument
/// on a dimension mismatch.
std::complex<double> eval_poly(const DirichletPolynomial& poly, std::span<const double> angles);

/// p(w) at an arbitrary point of C^d.
std::complex<double> eval_poly_at(const DirichletPolynomial& poly, std::span<const std::complex<double>> w);

/// The finite Dirichlet series m(z) = sum_{n in F} c_n n^-z.
std::complex<double> eval_dirichlet(const DirichletPolynomial& poly, std::complex<double> z);

struct MultiplierValue {
  std::complex<double> value;
  double tail_bound = 0.0;  // (jmax+1)^-Re z * sum_{j > jmax} phi_j, bounds |m_f(z) - value| for Re z > 0
};

/// sum_{j <= jmax} f^(j) j^-z for Re z > 0, with the envelope tail bound.
/// Throws std::invalid_argument for profiles without a summable envelope.
MultiplierValue eval_multiplier_truncated(const ProfileSpec& profile, std::complex<double> z, int jmax);

/// m_{J_eps}(z) = (4/pi) (1 - 2^-(1+z+eps)) zeta(1+z+eps).
///
/// The closed form is used on the real axis (requires eps > 0 and z > -eps).
/// Off the axis the odd-index Dirichlet series is summed directly up to
/// j = 2*10^6 + 1 (requires Re z + eps > 0; accuracy degrades as that approaches 0).
std::complex<double> jump_smoothed_multiplier(double eps, std::complex<double> z);

}  // namespace dilbasis
