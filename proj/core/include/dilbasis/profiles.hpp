#pragma once

// Odd 2-periodic profile families and their sine-Fourier coefficients
//   f^(j) = 2 int_0^1 f(x) sin(j pi x) dx,
// together with summable coefficient envelopes phi_j >= |f^(j)|.

#include <string>
#include <vector>

namespace dilbasis {

enum class ProfileKind { Jump, JumpSmoothed, Trapezoid, Cubic, PSine };

/// A profile family together with its parameter:
///   Jump          sign(sin(pi x))                      (no parameter)
///   JumpSmoothed  sum_j 4/(pi j^(1+eps)) sin(j pi x)   eps >= 0
///   Trapezoid     piecewise linear ramp of width alpha  0 < alpha <= 1/2
///   Cubic         C^1 cubic ramp of width beta          0 < beta < 1/2
///   PSine         sin_p(pi_p x)                         p > 1
class ProfileSpec {
 public:
  static ProfileSpec jump();
  static ProfileSpec jump_smoothed(double eps);
  static ProfileSpec trapezoid(double alpha);
  static ProfileSpec cubic(double beta);
  static ProfileSpec psine(double p);

  ProfileKind kind() const noexcept { return kind_; }
  double param() const noexcept { return param_; }

  /// Lower-case family name ("jump", "jump-smoothed", "trapezoid", "cubic", "psine").
  std::string name() const;
  /// Whether a summable envelope is available (not for the jump itself).
  bool has_envelope() const noexcept;

  bool operator==(const ProfileSpec&) const = default;

 private:
  ProfileSpec(ProfileKind kind, double param) : kind_(kind), param_(param) {}

  ProfileKind kind_;
  double param_;
};

/// Value of the odd, 2-periodic extension at x.
double eval_profile(const ProfileSpec& spec, double x);

/// f^(j) for j >= 1. Closed forms except PSine, which is integrated numerically.
double coeff(const ProfileSpec& spec, int j);

/// phi_j; 0 for even j. Throws std::invalid_argument for profiles without envelope.
double envelope(const ProfileSpec& spec, int j);

/// sum_j phi_j in closed form.
double envelope_sum(const ProfileSpec& spec);

/// Controls for the p-sine coefficient quadrature.
struct PSineQuadratureOptions {
  int panels_per_wavelength = 2;
  /// Compare against a run on panels of half the width and report the
  /// difference as the error estimate.
  bool estimate_error = true;
  /// Estimates above this throw NumericalError.
  double tolerance = 1e-12;
};

struct PSineCoefficients {
  double p = 0.0;
  /// values[j] = s_p^(j) for 0 <= j <= jmax; values[0] and even entries are 0.
  std::vector<double> values;
  double error_estimate = 0.0;
};

/// All p-sine coefficients up to jmax from one tabulation of s_p.
///
/// Uses s_p^(j) = 4 int_0^{1/2} sin_p(pi_p x) sin(j pi x) dx with composite
/// Gauss-Legendre panels, graded geometrically towards both endpoints where
/// s_p has algebraic singularities (x^(p+1) at 0, (1/2 - x)^p' at 1/2).
PSineCoefficients psine_coefficients(double p, int jmax, const PSineQuadratureOptions& opts = {});

/// Coefficients and envelope of one profile for 1 <= j <= jmax, computed at
/// construction. Immutable, so it can be shared across threads.
class CoefficientSeries {
 public:
  CoefficientSeries(const ProfileSpec& spec, int jmax, const PSineQuadratureOptions& opts = {});

  const ProfileSpec& profile() const noexcept { return spec_; }
  int jmax() const noexcept { return static_cast<int>(values_.size()) - 1; }

  /// f^(j); throws std::out_of_range beyond jmax.
  double coeff(int j) const;
  double envelope(int j) const;
  double envelope_sum() const noexcept { return envelope_sum_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  ProfileSpec spec_;
  std::vector<double> values_;
  std::vector<double> envelope_;
  double envelope_sum_ = 0.0;
  double error_estimate_ = 0.0;
};

/// Both sides of sum_{j odd} g_alpha^(j) = (2/alpha) int_0^alpha x/sin(pi x) dx
///                                         + (2/pi) log((1 + cos(alpha pi))/sin(alpha pi)).
struct SumIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
  double partial_sum = 0.0;    // explicit sum over odd j <= jmax
  double tail_estimate = 0.0;  // leading-order summation-by-parts tail
  double tail_bound = 0.0;     // bound on |true tail - tail_estimate|
  int jmax = 0;
};

SumIdentity trapezoid_sum_identity(double alpha, int jmax = 100000);

/// int_0^alpha x / sin(pi x) dx (integrand extended by 1/pi at 0).
double integral_x_over_sin(double alpha);

struct TruncatedValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// Coefficient-sequence distance between J and J_eps,
/// (sum_j |a_0(j) - a_eps(j)|^2)^(1/2), which is sqrt(2) times their L^2(0,1)
/// distance. Odd j <= jmax are summed explicitly; tail_bound bounds the
/// truncation error of the returned value.
TruncatedValue jump_smoothed_l2_distance(double eps, int jmax = 1000000);

}  // namespace dilbasis
