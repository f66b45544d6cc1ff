#include "dilbasis/ptrig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dilbasis {

namespace {

// 2^-64 is below double epsilon, so 64 terms of either series suffice.
constexpr int kSeriesTerms = 64;

void require_unit_interval(double y, const char* what) {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw std::domain_error(std::string(what) + ": argument " + std::to_string(y) +
                            " outside [0, 1]");
  }
}

// Newton iteration safeguarded by bisection on a bracket [lo, hi] that is
// known to contain the root of an increasing function.
template <class F>
double safeguarded_newton(F&& f, double lo, double hi, double x) {
  for (int it = 0; it < 200; ++it) {
    auto [value, slope] = f(x);
    if (value == 0.0) return x;
    if (value > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    double next = x - value / slope;
    if (!(next > lo && next < hi) || !std::isfinite(next)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - x) <= 1e-15 * std::abs(x) || hi - lo <= 1e-15 * std::abs(hi)) {
      return next;
    }
    x = next;
  }
  return x;
}

}  // namespace

PExponent::PExponent(double p) : p_(p), pprime_(p / (p - 1.0)) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::domain_error("p-exponent must satisfy p > 1, got " + std::to_string(p));
  }
}

double pi_p(PExponent p) {
  const double q = p.value();
  return 2.0 * std::numbers::pi / (q * std::sin(std::numbers::pi / q));
}

PTrigContext::PTrigContext(PExponent p)
    : p_(p),
      pi_p_(dilbasis::pi_p(p)),
      y_split_(std::pow(0.5, 1.0 / p.value())),
      s_split_(std::pow(0.5, 1.0 / p.conjugate())),
      F_split_(0.0) {
  const double inv_p = 1.0 / p.value();
  const double inv_pp = 1.0 / p.conjugate();
  lower_coeffs_.resize(kSeriesTerms);
  upper_coeffs_.resize(kSeriesTerms);
  double lower_binom = 1.0;  // (1/p)_n / n!
  double upper_binom = 1.0;  // (1/p')_n / n!
  for (int n = 0; n < kSeriesTerms; ++n) {
    if (n > 0) {
      lower_binom *= (inv_p + n - 1) / n;
      upper_binom *= (inv_pp + n - 1) / n;
    }
    lower_coeffs_[n] = lower_binom / (p.value() * n + 1.0);
    upper_coeffs_[n] = upper_binom / (n + inv_pp);
  }
  F_split_ = lower_series(y_split_, 0.5);
}

double PTrigContext::lower_series(double y, double u) const {
  double acc = 0.0;
  for (int n = kSeriesTerms - 1; n >= 0; --n) acc = acc * u + lower_coeffs_[n];
  return y * acc;
}

double PTrigContext::upper_series(double s, double w) const {
  double acc = 0.0;
  for (int n = kSeriesTerms - 1; n >= 0; --n) acc = acc * w + upper_coeffs_[n];
  return s * acc / p_.value();
}

double PTrigContext::F(double y) const {
  require_unit_interval(y, "F_p");
  const double p = p_.value();
  const double pp = p_.conjugate();
  const double u = std::pow(y, p);
  if (u <= 0.5) return lower_series(y, u);
  if (y == 1.0) return 0.5 * pi_p_;
  // pi_p/2 - upper_series loses digits to cancellation when p is close to 1
  // (both are about p' while F is O(1)). The leading term b_0 = p' is
  // combined with pi_p/2 analytically:
  //   pi_p/2 - (p'/p) s = (p'/p) [(Gamma(1/p) Gamma(1 + 1/p') - 1) + (1 - s)].
  const double w = 1.0 - u;
  const double log_s = std::log(w) / pp;
  const double s = std::exp(log_s);
  const double gamma_term = std::expm1(std::lgamma(1.0 / p) + std::lgamma(1.0 + 1.0 / pp));
  double rest = 0.0;
  for (int n = kSeriesTerms - 1; n >= 1; --n) rest = rest * w + upper_coeffs_[n];
  rest *= w;
  return pp / p * (gamma_term - std::expm1(log_s)) - s * rest / p;
}

double PTrigContext::F_complement(double y) const {
  require_unit_interval(y, "F_p");
  const double u = std::pow(y, p_.value());
  if (u <= 0.5) return 0.5 * pi_p_ - lower_series(y, u);
  const double w = 1.0 - u;
  return upper_series(std::pow(w, 1.0 / p_.conjugate()), w);
}

double PTrigContext::I(double y) const { return 2.0 * F(y) / pi_p_; }

double PTrigContext::invert_lower(double theta) const {
  if (theta <= 0.0) return 0.0;
  const double p = p_.value();
  auto f = [&](double y) {
    const double u = std::pow(y, p);
    return std::pair{lower_series(y, u) - theta, std::pow(1.0 - u, -1.0 / p)};
  };
  // F_p(y) >= y, so the root never exceeds theta.
  const double hi = std::min(theta, y_split_);
  return safeguarded_newton(f, 0.0, hi, hi);
}

double PTrigContext::invert_upper(double delta) const {
  if (delta <= 0.0) return 1.0;
  const double p = p_.value();
  const double pp = p_.conjugate();
  auto f = [&](double s) {
    const double w = std::pow(s, pp);
    return std::pair{upper_series(s, w) - delta, (pp / p) * std::pow(1.0 - w, -1.0 / pp)};
  };
  // The series is bounded below by its leading term (p'/p) s.
  const double hi = std::min(s_split_, p * delta / pp);
  const double s = safeguarded_newton(f, 0.0, hi, hi);
  const double w = std::pow(s, pp);
  return std::exp(std::log1p(-w) / p);
}

double PTrigContext::sin_from_peak(double delta) const {
  const double half = 0.5 * pi_p_;
  if (delta >= half) return 0.0;
  if (half - delta <= F_split_) return invert_lower(half - delta);
  return invert_upper(delta);
}

double PTrigContext::sin(double x) const {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double period = 2.0 * pi_p_;
  const double half = 0.5 * pi_p_;
  // Fold order: reduce modulo 2 pi_p, shift by pi_p using sin_p(x + pi_p) = -sin_p(x),
  // then reflect about pi_p/2.
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  double sign = 1.0;
  if (r >= pi_p_) {
    r -= pi_p_;
    sign = -1.0;
  }
  if (r > half) return sign * sin_from_peak(r - half);
  if (r <= F_split_) return sign * invert_lower(r);
  return sign * invert_upper(half - r);
}

double PTrigContext::I_inverse(double v) const {
  require_unit_interval(v, "I_p inverse");
  const double theta = 0.5 * pi_p_ * v;
  if (theta <= F_split_) return invert_lower(theta);
  return invert_upper(0.5 * pi_p_ * (1.0 - v));
}

double F_p(PExponent p, double y) { return PTrigContext(p).F(y); }

double I_p(PExponent p, double y) { return PTrigContext(p).I(y); }

double sin_p(PExponent p, double x) { return PTrigContext(p).sin(x); }

std::pair<double, double> i_p_ratio_bounds(PExponent p, PExponent q, double y) {
  if (!(p.value() < q.value())) {
    throw std::domain_error("i_p_ratio_bounds requires p < q");
  }
  if (!(y > 0.0 && y < 1.0)) {
    throw std::domain_error("i_p_ratio_bounds requires 0 < y < 1");
  }
  return {I_p(q, y) / I_p(p, y), pi_p(p) / pi_p(q)};
}

}  // namespace dilbasis
