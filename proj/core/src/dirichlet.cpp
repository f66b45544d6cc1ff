#include "dilbasis/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dilbasis/zeta.hpp"

namespace dilbasis {

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

SupportSet::SupportSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  for (auto n : elements_) {
    if (n < 1) throw std::invalid_argument("support elements must be positive, got " + std::to_string(n));
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || elements_.front() != 1) {
    throw std::invalid_argument("support set must contain 1");
  }
  for (auto n : elements_) {
    for (auto f : prime_factors(n)) primes_.push_back(f);
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());

  exponents_.reserve(elements_.size());
  for (auto n : elements_) {
    std::vector<int> nu(primes_.size(), 0);
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      while (n % primes_[i] == 0) {
        n /= primes_[i];
        ++nu[i];
      }
    }
    exponents_.push_back(std::move(nu));
  }
}

std::size_t SupportSet::index_of(std::int64_t n) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), n);
  if (it == elements_.end() || *it != n) {
    throw std::out_of_range("element " + std::to_string(n) + " is not in the support set");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

bool SupportSet::contains(std::int64_t n) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), n);
}

const std::vector<int>& SupportSet::exponents(std::int64_t n) const { return exponents_[index_of(n)]; }

SupportSet build_support(std::vector<std::int64_t> elements) { return SupportSet(std::move(elements)); }

DirichletPolynomial::DirichletPolynomial(SupportSet support, std::vector<std::complex<double>> coeffs)
    : support_(std::move(support)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != support_.size()) {
    throw std::invalid_argument("coefficient count does not match the support set");
  }
}

DirichletPolynomial::DirichletPolynomial(SupportSet support, std::span<const double> real_coeffs)
    : DirichletPolynomial(std::move(support),
                          std::vector<std::complex<double>>(real_coeffs.begin(), real_coeffs.end())) {}

std::complex<double> eval_poly(const DirichletPolynomial& poly, std::span<const double> angles) {
  if (static_cast<int>(angles.size()) != poly.dimension()) {
    throw std::invalid_argument("eval_poly: expected " + std::to_string(poly.dimension()) + " angles, got " +
                                std::to_string(angles.size()));
  }
  const auto& support = poly.support();
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < support.size(); ++k) {
    const auto& nu = support.exponents_at(k);
    double phase = 0.0;
    for (std::size_t i = 0; i < nu.size(); ++i) phase += nu[i] * angles[i];
    acc += poly.coeffs()[k] * std::polar(1.0, phase);
  }
  return acc;
}

std::complex<double> eval_poly_at(const DirichletPolynomial& poly, std::span<const std::complex<double>> w) {
  if (static_cast<int>(w.size()) != poly.dimension()) {
    throw std::invalid_argument("eval_poly_at: dimension mismatch");
  }
  const auto& support = poly.support();
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < support.size(); ++k) {
    const auto& nu = support.exponents_at(k);
    std::complex<double> term = poly.coeffs()[k];
    for (std::size_t i = 0; i < nu.size(); ++i) {
      for (int e = 0; e < nu[i]; ++e) term *= w[i];
    }
    acc += term;
  }
  return acc;
}

std::complex<double> eval_dirichlet(const DirichletPolynomial& poly, std::complex<double> z) {
  const auto& elements = poly.support().elements();
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    acc += poly.coeffs()[k] * std::exp(-z * std::log(static_cast<double>(elements[k])));
  }
  return acc;
}

MultiplierValue eval_multiplier_truncated(const ProfileSpec& profile, std::complex<double> z, int jmax) {
  if (!(z.real() > 0.0)) throw std::domain_error("eval_multiplier_truncated needs Re z > 0");
  if (!profile.has_envelope()) {
    throw std::invalid_argument("profile '" + profile.name() + "' has no summable envelope");
  }
  const CoefficientSeries series(profile, jmax);
  MultiplierValue out;
  double head = 0.0;
  for (int j = 1; j <= jmax; ++j) {
    const double c = series.coeff(j);
    head += series.envelope(j);
    if (c != 0.0) out.value += c * std::exp(-z * std::log(static_cast<double>(j)));
  }
  // envelope decreases in j, so |j^-z| <= (jmax + 1)^-Re z over the tail
  out.tail_bound = std::max(0.0, series.envelope_sum() - head) * std::pow(jmax + 1.0, -z.real());
  return out;
}

std::complex<double> jump_smoothed_multiplier(double eps, std::complex<double> z) {
  if (!(eps > 0.0)) throw std::domain_error("jump_smoothed_multiplier needs eps > 0");
  if (!(z.real() + eps > 0.0)) {
    throw std::domain_error("jump_smoothed_multiplier needs Re z > -eps");
  }
  const double scale = 4.0 / std::numbers::pi;
  if (z.imag() == 0.0) {
    const double s = 1.0 + z.real() + eps;
    return scale * (1.0 - std::pow(2.0, -s)) * zeta(s);
  }
  const std::complex<double> s = 1.0 + z + eps;
  std::complex<double> acc = 0.0;
  for (int j = 2000001; j >= 1; j -= 2) acc += std::exp(-s * std::log(static_cast<double>(j)));
  return scale * acc;
}

}  // namespace dilbasis
