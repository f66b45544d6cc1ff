#include "dilbasis/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dilbasis {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

// sum_{j <= k} (phi_j - |f^(j)|)
double envelope_correction(const CoefficientSeries& series, int k) {
  double acc = 0.0;
  for (int j = 1; j <= k; ++j) acc += series.envelope(j) - std::abs(series.coeff(j));
  return acc;
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::Equivalent ? "Equivalent" : "Inconclusive"; }

CriterionReport check_multi_term(const CoefficientSeries& series, const SupportSet& support, int k,
                                 const TorusMinOptions& torus) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const auto& elements = support.elements();
  if (elements.back() > series.jmax() || k > series.jmax()) {
    throw std::invalid_argument("coefficient series too short for the support set and k");
  }
  CriterionReport r;
  r.profile = series.profile();
  r.support = elements;
  r.k = k;
  r.phi = series.envelope_sum();

  for (auto n : elements) {
    const double c = series.coeff(static_cast<int>(n));
    r.support_coeffs.push_back(c);
    r.sum_F_abs += std::abs(c);
  }
  const double c1 = series.coeff(1);
  r.cond1_margin = c1 - (r.sum_F_abs - std::abs(c1));
  r.correction = envelope_correction(series, k);

  const DirichletPolynomial poly(support, std::span<const double>(r.support_coeffs));
  r.torus = min_modulus(poly, torus);
  r.mu_raw = r.torus.mu;
  r.mu = r.torus.method == MinMethod::ClosedForm ? r.mu_raw : std::max(0.0, r.mu_raw - torus.refine_tol);

  r.cond2_value = r.mu - r.phi + r.sum_F_abs + r.correction;
  r.verdict = (r.cond1_margin > 0.0 && r.cond2_value > 0.0) ? Verdict::Equivalent : Verdict::Inconclusive;
  return r;
}

CriterionReport check_multi_term(const ProfileSpec& profile, const SupportSet& support, int k,
                                 const CriterionOptions& opts) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (!profile.has_envelope()) {
    throw std::invalid_argument("profile '" + profile.name() + "' has no summable coefficient envelope");
  }
  const int jmax = std::max<int>(k, static_cast<int>(support.elements().back()));
  const CoefficientSeries series(profile, jmax, opts.psine);
  return check_multi_term(series, support, k, opts.torus);
}

TwoTermReport two_term_from_coefficients(double f1, double fp, double fp2, double rest_bound) {
  TwoTermReport r;
  r.f1 = f1;
  r.fp = fp;
  r.fp2 = fp2;
  r.rest_bound = rest_bound;
  r.coefficient_gate = fp2 > 0.0 && fp2 + std::abs(fp) < f1;
  if (!r.coefficient_gate) {
    r.reason = "coefficient gate";
    return r;
  }
  r.regime = std::abs(fp) * (f1 + fp2) >= 4.0 * f1 * fp2 ? 1 : 2;
  r.mu = min_modulus_three_term(f1, fp, fp2);
  if (r.regime == 1) {
    // sum_{j not in {1, p^2}} |f^(j)| < f^(1) + f^(p^2)
    r.lhs = rest_bound + std::abs(fp);
    r.rhs = f1 + fp2;
  } else {
    r.lhs = rest_bound;
    r.rhs = r.mu;
  }
  r.margin = r.rhs - r.lhs;
  if (r.margin > 0.0) {
    r.verdict = Verdict::Equivalent;
  } else {
    r.reason = r.regime == 1 ? "regime-1 inequality fails" : "regime-2 inequality fails";
  }
  return r;
}

TwoTermReport check_two_term(const ProfileSpec& profile, std::int64_t prime, int k,
                             const CriterionOptions& opts) {
  if (!is_prime(prime)) throw std::invalid_argument("expected a prime, got " + std::to_string(prime));
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (!profile.has_envelope()) {
    throw std::invalid_argument("profile '" + profile.name() + "' has no summable coefficient envelope");
  }
  const int p2 = static_cast<int>(prime * prime);
  const CoefficientSeries series(profile, std::max(k, p2), opts.psine);
  const double f1 = series.coeff(1);
  const double fp = series.coeff(static_cast<int>(prime));
  const double fp2 = series.coeff(p2);
  const double rest =
      series.envelope_sum() - (std::abs(f1) + std::abs(fp) + std::abs(fp2)) - envelope_correction(series, k);
  TwoTermReport r = two_term_from_coefficients(f1, fp, fp2, rest);
  r.profile = profile;
  r.prime = prime;
  r.k = k;
  return r;
}

SupportSet prime_square_support(int d) {
  if (d == 1) return SupportSet({1, 3, 9});
  if (d == 2) return SupportSet({1, 3, 5, 9, 25});
  throw std::invalid_argument("prime_square_support: d must be 1 or 2");
}

PSineMultiTermReport psine_multi_term_check(const CoefficientSeries& series, int d, int k,
                                            const TorusMinOptions& torus) {
  if (series.profile().kind() != ProfileKind::PSine) {
    throw std::invalid_argument("psine_multi_term_check needs a p-sine coefficient series");
  }
  PSineMultiTermReport r;
  r.p = series.profile().param();
  r.d = d;
  r.k = k;
  r.criterion = check_multi_term(series, prime_square_support(d), k, torus);
  r.value = r.criterion.cond2_value;
  r.mu = r.criterion.mu;
  const double s1 = series.coeff(1);
  r.main_sum = r.criterion.sum_F_abs - std::abs(s1);
  r.main_margin = s1 - r.main_sum;
  r.verdict = (r.main_margin > 0.0 && r.value > 0.0) ? Verdict::Equivalent : Verdict::Inconclusive;
  return r;
}

PSineMultiTermReport psine_multi_term_check(double p, int d, int k, const CriterionOptions& opts) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const int jmax = std::max(k, d == 2 ? 25 : 9);
  const CoefficientSeries series(ProfileSpec::psine(p), jmax, opts.psine);
  return psine_multi_term_check(series, d, k, opts.torus);
}

PSineThreeTermReport psine_three_term_check(const CoefficientSeries& series, int k) {
  if (series.profile().kind() != ProfileKind::PSine) {
    throw std::invalid_argument("psine_three_term_check needs a p-sine coefficient series");
  }
  const double p = series.profile().param();
  if (!(p > 1.0 && p < 12.0 / 11.0)) throw std::domain_error("psine_three_term_check needs 1 < p < 12/11");
  if (k < 9 || k % 2 == 0) throw std::invalid_argument("psine_three_term_check needs odd k >= 9");

  PSineThreeTermReport r;
  r.p = p;
  r.k = k;
  r.s1 = series.coeff(1);
  r.s3 = series.coeff(3);
  r.s9 = series.coeff(9);
  r.cond1_margin = r.s1 - std::abs(r.s3) - r.s9;
  r.cond2_margin = std::abs(r.s3) * (r.s1 + r.s9) - 4.0 * r.s9 * r.s1;

  // phi - sum_{j <= k} phi_j with phi = pi_p/2, phi_j = 4 pi_p / (j pi)^2
  double head = 0.0;
  for (int j = 1; j <= k; j += 2) head += series.envelope(j);
  r.lhs = series.envelope_sum() - head;
  double rest = 0.0;
  for (int j = 3; j <= k; j += 2) {
    if (j != 9) rest += std::abs(series.coeff(j));
  }
  r.rhs = r.s1 + r.s9 - rest;
  r.margin = r.rhs - r.lhs;
  const bool ok = r.s9 > 0.0 && r.cond1_margin > 0.0 && r.cond2_margin >= 0.0 && r.margin > 0.0;
  r.verdict = ok ? Verdict::Equivalent : Verdict::Inconclusive;
  return r;
}

PSineThreeTermReport psine_three_term_check(double p, int k, const PSineQuadratureOptions& opts) {
  if (!(p > 1.0 && p < 12.0 / 11.0)) throw std::domain_error("psine_three_term_check needs 1 < p < 12/11");
  if (k < 9) throw std::invalid_argument("psine_three_term_check needs odd k >= 9");
  const CoefficientSeries series(ProfileSpec::psine(p), k, opts);
  return psine_three_term_check(series, k);
}

}  // namespace dilbasis
