#pragma once

// Reference computations for the tests. They go through Boost's special
// functions and adaptive quadrature so that they share no code path with
// the library.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numbers>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

// pi_p = 2 pi / (p sin(pi/p)).
inline double pi_p(double p) { return 2.0 * pi / (p * std::sin(pi / p)); }

// F_p(y) = (1/p) B(1/p, 1 - 1/p) I_{y^p}(1/p, 1 - 1/p).
inline double F_p(double p, double y) {
  const double a = 1.0 / p;
  const double b = 1.0 - 1.0 / p;
  return boost::math::beta(a, b) * boost::math::ibeta(a, b, std::pow(y, p)) / p;
}

inline double I_p(double p, double y) { return 2.0 * F_p(p, y) / pi_p(p); }

// F_p(y) by tanh-sinh quadrature in v = 1 - t, so that 1 - t^p stays
// accurate next to the singularity at t = 1.
inline double F_p_quadrature(double p, double y) {
  boost::math::quadrature::tanh_sinh<double> ts;
  auto g = [p](double v) { return std::pow(-std::expm1(p * std::log1p(-v)), -1.0 / p); };
  return ts.integrate(g, 1.0 - y, 1.0);
}

// Inverse of F_p on [0, pi_p/2] by bisection on the beta form.
inline double sin_p_first_quarter(double p, double x) {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    (F_p(p, mid) < x ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

template <class F>
double gk(F f, double a, double b, double tol = 1e-13) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, tol);
}

// Piecewise profile definitions on [0, 1].
inline double trapezoid(double a, double x) {
  if (x < a) return x / a;
  if (x > 1.0 - a) return (1.0 - x) / a;
  return 1.0;
}

inline double cubic(double b, double x) {
  const double y = std::min(x, 1.0 - x);
  if (y >= b) return 1.0;
  return (y / b + 1.0) * (y / b + 1.0) * (1.0 - y / (2.0 * b)) - 1.0;
}

// 2 int_0^1 f(x) sin(j pi x) dx, split at the kinks.
template <class F>
double sine_coeff(F f, int j, double kink) {
  auto g = [&](double x) { return f(x) * std::sin(j * pi * x); };
  return 2.0 * (gk(g, 0.0, kink) + gk(g, kink, 1.0 - kink) + gk(g, 1.0 - kink, 1.0));
}

// Odd p-sine coefficient after the substitution u = sin_p(pi_p x):
// (4/pi_p) int_0^1 u sin((j pi/2) I_p(u)) (1 - u^p)^(-1/p) du.
inline double psine_coeff(double p, int j) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double pp = pi_p(p);
  auto g = [&](double v) {
    const double u = 1.0 - v;
    return u * std::sin(0.5 * j * pi * I_p(p, u)) * std::pow(-std::expm1(p * std::log1p(-v)), -1.0 / p);
  };
  return 4.0 / pp * ts.integrate(g, 0.0, 1.0);
}

// int_0^1 s_p(x)^2 dx = (2/pi_p) int_0^1 u^2 (1 - u^p)^(-1/p) du.
inline double psine_l2(double p) {
  boost::math::quadrature::tanh_sinh<double> ts;
  auto g = [p](double v) { return (1 - v) * (1 - v) * std::pow(-std::expm1(p * std::log1p(-v)), -1.0 / p); };
  return 2.0 / pi_p(p) * ts.integrate(g, 0.0, 1.0);
}

// int_y^x cos((k pi/2) I_p(u)) du.
// tanh-sinh copes with the square-root type endpoint of I_p at u = 1
inline double cosine_integral(double p, int k, double y, double x) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate([&](double u) { return std::cos(0.5 * k * pi * I_p(p, u)); }, y, x, 1e-12);
}

}  // namespace oracle
