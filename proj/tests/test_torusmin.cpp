#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "dilbasis/dirichlet.hpp"
#include "dilbasis/profiles.hpp"
#include "dilbasis/torusmin.hpp"

using namespace dilbasis;
constexpr double kPi = 3.14159265358979323846;

namespace {

double grid_min_three(double c1, double c2, double c3, int n) {
  double best = 1e300;
  for (int i = 0; i < n; ++i) {
    const std::complex<double> w = std::polar(1.0, 2 * kPi * i / n);
    best = std::min(best, std::abs(c1 + c2 * w + c3 * w * w));
  }
  return best;
}

}  // namespace

TEST_CASE("three-term closed form examples") {
  CHECK(min_modulus_three_term(1.0, -0.5, 0.1) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(min_modulus_three_term(1.0, 0.1, 0.5) == doctest::Approx(0.5 * std::sqrt(1 - 0.01 / 2)).epsilon(1e-15));
  CHECK(min_modulus_three_term(1.0, 0.1, 0.5) == doctest::Approx(grid_min_three(1.0, 0.1, 0.5, 1000000)).epsilon(1e-9));
  CHECK(min_modulus_three_term(1.0, 0.0, 0.3) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(grid_min_three(1.0, -0.5, 0.1, 100000) == doctest::Approx(0.6).epsilon(1e-6));
}

TEST_CASE("three-term closed form against a dense grid") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> pos(0.01, 3.0), any(-4.0, 4.0);
  for (int t = 0; t < 200; ++t) {
    const double c1 = pos(rng), c2 = any(rng), c3 = pos(rng);
    INFO(c1 << " " << c2 << " " << c3);
    CHECK(std::abs(min_modulus_three_term(c1, c2, c3) - grid_min_three(c1, c2, c3, 100000)) < 1e-4);
  }
}

TEST_CASE("minimizer on constant and one-prime polynomials") {
  const std::vector<double> c0{0.7};
  const auto r0 = min_modulus(DirichletPolynomial(SupportSet({1}), c0));
  CHECK(r0.mu == doctest::Approx(0.7));
  CHECK(r0.method == MinMethod::ClosedForm);

  const std::vector<double> c{1.0, -0.5, 0.1};
  const auto r = min_modulus(DirichletPolynomial(SupportSet({1, 3, 9}), c));
  CHECK(r.mu == doctest::Approx(0.6).epsilon(1e-10));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pos(0.05, 2.0), any(-2.0, 2.0);
  for (int t = 0; t < 30; ++t) {
    const std::vector<double> cc{pos(rng), any(rng), pos(rng)};
    const auto rr = min_modulus(DirichletPolynomial(SupportSet({1, 5, 25}), cc));
    CHECK(rr.mu == doctest::Approx(min_modulus_three_term(cc[0], cc[1], cc[2])).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("two-prime minimum against an independent minimization") {
  const double a = 0.035;
  std::vector<double> c;
  for (int n : {1, 3, 5, 9, 25}) c.push_back(coeff(ProfileSpec::trapezoid(a), n));
  auto f = [&](double x, double y) {
    const double re = c[0] + c[1] * std::cos(x) + c[2] * std::cos(y) + c[3] * std::cos(2 * x) + c[4] * std::cos(2 * y);
    const double im = c[1] * std::sin(x) + c[2] * std::sin(y) + c[3] * std::sin(2 * x) + c[4] * std::sin(2 * y);
    return std::hypot(re, im);
  };
  // coarse grid, then alternating one-dimensional Brent refinement
  constexpr int n = 600;
  double bx = 0, by = 0, best = 1e300;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double x = -kPi + 2 * kPi * i / n, y = -kPi + 2 * kPi * k / n;
      const double v = f(x, y);
      if (v < best) best = v, bx = x, by = y;
    }
  }
  const double h = 2 * kPi / n;
  for (int sweep = 0; sweep < 60; ++sweep) {
    bx = boost::math::tools::brent_find_minima([&](double x) { return f(x, by); }, bx - h, bx + h, 50).first;
    by = boost::math::tools::brent_find_minima([&](double y) { return f(bx, y); }, by - h, by + h, 50).first;
  }
  best = f(bx, by);
  const auto r = min_modulus(DirichletPolynomial(SupportSet({1, 3, 5, 9, 25}), c));
  CHECK(r.mu == doctest::Approx(best).epsilon(1e-6).scale(1.0));
  CHECK(r.mu <= r.grid_mu);
}

TEST_CASE("results do not depend on the thread count") {
  std::vector<double> c;
  for (int n : {1, 3, 5, 9, 25}) c.push_back(coeff(ProfileSpec::cubic(0.03), n));
  const DirichletPolynomial poly(SupportSet({1, 3, 5, 9, 25}), c);
  TorusMinOptions one, many;
  many.jobs = 6;
  const auto a = min_modulus(poly, one);
  const auto b = min_modulus(poly, many);
  CHECK(a.mu == b.mu);
  CHECK(a.argmin == b.argmin);
}

TEST_CASE("zero-free test") {
  const std::vector<double> a{1.0, -0.5, 0.1}, b{1.0, -0.9, 0.2};
  CHECK(zero_free_check(DirichletPolynomial(SupportSet({1, 3, 9}), a)));
  CHECK_FALSE(zero_free_check(DirichletPolynomial(SupportSet({1, 3, 9}), b)));
  std::vector<double> g;
  for (int n : {1, 3, 5, 9, 25}) g.push_back(coeff(ProfileSpec::trapezoid(0.03), n));
  CHECK(zero_free_check(DirichletPolynomial(SupportSet({1, 3, 5, 9, 25}), g)));
}

TEST_CASE("option validation") {
  const std::vector<double> c{1.0, 0.2, 0.1, 0.1, 0.1};
  const DirichletPolynomial p(SupportSet({1, 2, 3, 5, 7}), c);
  CHECK_THROWS_AS(min_modulus(p), std::invalid_argument);
  TorusMinOptions bad;
  bad.grid_n = 10;
  const std::vector<double> c3{1.0, 0.2, 0.1};
  CHECK_THROWS_AS(min_modulus(DirichletPolynomial(SupportSet({1, 3, 9}), c3), bad), std::invalid_argument);
}
