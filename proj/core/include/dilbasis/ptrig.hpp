#pragma once

// Generalized p-trigonometric functions: pi_p, F_p (the p-arcsine), its
// normalization I_p = (2/pi_p) F_p and the inverse sin_p.

#include <utility>
#include <vector>

namespace dilbasis {

/// Exponent p > 1 together with its conjugate p' = p/(p-1).
class PExponent {
 public:
  explicit PExponent(double p);

  double value() const noexcept { return p_; }
  double conjugate() const noexcept { return pprime_; }

 private:
  double p_;
  double pprime_;
};

/// Immutable evaluation context for one exponent.
///
/// F_p is evaluated by integrating the binomial expansion of
/// (1 - t^p)^(-1/p) term by term. Below the split point y^p = 1/2 the
/// expansion in t^p is used; above it the expansion in w = 1 - t^p, which
/// gives F_p(1) - F_p(y) = (1/p) w^(1/p') * sum_n b_n w^n. Both series
/// converge at least like 2^-n, so a fixed number of terms reaches full
/// double precision everywhere.
class PTrigContext {
 public:
  explicit PTrigContext(PExponent p);

  PExponent exponent() const noexcept { return p_; }
  double p() const noexcept { return p_.value(); }
  double pi_p() const noexcept { return pi_p_; }

  /// F_p(y) for y in [0, 1].
  double F(double y) const;
  /// F_p(1) - F_p(y), accurate when y is close to 1.
  double F_complement(double y) const;
  /// I_p(y) = (2/pi_p) F_p(y).
  double I(double y) const;

  /// sin_p on the whole real line (odd, even about pi_p/2, 2 pi_p periodic).
  double sin(double x) const;
  /// sin_p(pi_p/2 - delta) for delta in [0, pi_p/2]; avoids cancellation
  /// in the argument near the peak.
  double sin_from_peak(double delta) const;
  /// Inverse of I_p on [0, 1]: returns u with I_p(u) = v.
  double I_inverse(double v) const;

 private:
  // y * sum a_n u^n with u = y^p, valid for u <= 1/2.
  double lower_series(double y, double u) const;
  // (1/p) s * sum b_n w^n with w = s^p', valid for w <= 1/2.
  double upper_series(double s, double w) const;
  double invert_lower(double theta) const;
  double invert_upper(double delta) const;

  PExponent p_;
  double pi_p_;
  double y_split_;      // 2^(-1/p)
  double s_split_;      // 2^(-1/p')
  double F_split_;      // F_p(y_split_)
  std::vector<double> lower_coeffs_;
  std::vector<double> upper_coeffs_;
};

/// pi_p = 2 pi / (p sin(pi/p)).
double pi_p(PExponent p);

/// F_p(y) = int_0^y (1 - t^p)^(-1/p) dt. Throws std::domain_error outside [0, 1].
double F_p(PExponent p, double y);

/// I_p(y) = (2/pi_p) F_p(y).
double I_p(PExponent p, double y);

double sin_p(PExponent p, double x);

/// Returns (I_q(y)/I_p(y), pi_p/pi_q). For 1 < p < q and 0 < y < 1 the
/// first component lies strictly between 1 and the second.
std::pair<double, double> i_p_ratio_bounds(PExponent p, PExponent q, double y);

}  // namespace dilbasis
