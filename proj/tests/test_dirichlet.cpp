#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "dilbasis/dirichlet.hpp"
#include "dilbasis/profiles.hpp"
#include "dilbasis/zeta.hpp"

using namespace dilbasis;
using cd = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

TEST_CASE("support sets and exponent vectors") {
  const SupportSet one({1});
  CHECK(one.dimension() == 0);
  CHECK(one.primes().empty());

  const SupportSet s3({1, 3, 9});
  CHECK(s3.primes() == std::vector<std::int64_t>{3});
  CHECK(s3.exponents(3) == std::vector<int>{1});
  CHECK(s3.exponents(9) == std::vector<int>{2});

  const SupportSet s35({1, 3, 5, 9, 25});
  CHECK(s35.primes() == std::vector<std::int64_t>{3, 5});
  CHECK(s35.exponents(3) == std::vector<int>{1, 0});
  CHECK(s35.exponents(5) == std::vector<int>{0, 1});
  CHECK(s35.exponents(9) == std::vector<int>{2, 0});
  CHECK(s35.exponents(25) == std::vector<int>{0, 2});

  const SupportSet mixed({1, 12, 1, 45});
  CHECK(mixed.size() == 3);
  CHECK(mixed.primes() == std::vector<std::int64_t>{2, 3, 5});
  CHECK(mixed.exponents(12) == std::vector<int>{2, 1, 0});
  CHECK(mixed.exponents(45) == std::vector<int>{0, 2, 1});

  CHECK_THROWS_AS(SupportSet({3, 9}), std::invalid_argument);
  CHECK_THROWS_AS(SupportSet({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(s3.exponents(5), std::out_of_range);
}

TEST_CASE("polynomial evaluation") {
  const std::vector<double> one_c{0.7};
  const DirichletPolynomial c1(SupportSet({1}), one_c);
  CHECK(eval_poly(c1, std::vector<double>{}) == cd(0.7));

  const std::vector<double> c{1.0, -0.5, 0.1};
  const DirichletPolynomial poly(SupportSet({1, 3, 9}), c);
  CHECK(std::abs(eval_poly(poly, std::vector<double>{0.0}) - cd(0.6)) < 1e-15);
  CHECK_THROWS_AS(eval_poly(poly, std::vector<double>{0.0, 1.0}), std::invalid_argument);

  // p(3^-z) = m(z)
  const cd z(0.7, 2.3);
  const std::vector<cd> w{std::pow(cd(3.0), -z)};
  CHECK(std::abs(eval_poly_at(poly, w) - eval_dirichlet(poly, z)) < 1e-14);
}

TEST_CASE("two-prime polynomial matches the trigonometric expansion") {
  const double a = 0.035;
  const auto g = ProfileSpec::trapezoid(a);
  std::vector<double> c;
  for (int n : {1, 3, 5, 9, 25}) c.push_back(coeff(g, n));
  const DirichletPolynomial poly(SupportSet({1, 3, 5, 9, 25}), c);
  for (int i = 0; i < 20; ++i) {
    for (int k = 0; k < 20; ++k) {
      const double x = -kPi + 2 * kPi * i / 20.0;
      const double y = -kPi + 2 * kPi * k / 20.0;
      const double re = c[0] + c[1] * std::cos(x) + c[2] * std::cos(y) + c[3] * std::cos(2 * x) + c[4] * std::cos(2 * y);
      const double im = c[1] * std::sin(x) + c[2] * std::sin(y) + c[3] * std::sin(2 * x) + c[4] * std::sin(2 * y);
      const cd v = eval_poly(poly, std::vector<double>{x, y});
      CHECK(v.real() == doctest::Approx(re).epsilon(1e-14).scale(1.0));
      CHECK(v.imag() == doctest::Approx(im).epsilon(1e-14).scale(1.0));
    }
  }
}

TEST_CASE("truncated multiplier") {
  const auto one = eval_multiplier_truncated(ProfileSpec::psine(2.0), cd(1.0), 1);
  CHECK(std::abs(one.value - cd(1.0)) < 1e-12);
  CHECK(one.tail_bound < 0.6);

  const auto t4 = eval_multiplier_truncated(ProfileSpec::trapezoid(0.3), cd(2.0), 10000);
  const auto t5 = eval_multiplier_truncated(ProfileSpec::trapezoid(0.3), cd(2.0), 100000);
  CHECK(t4.tail_bound < 1e-6);
  CHECK(std::abs(t4.value - t5.value) <= t4.tail_bound);

  CHECK_THROWS_AS(eval_multiplier_truncated(ProfileSpec::jump(), cd(1.0), 10), std::invalid_argument);
}

TEST_CASE("smoothed-jump multiplier closed form") {
  CHECK(jump_smoothed_multiplier(1.0, cd(1.0)).real() ==
        doctest::Approx(4.0 / kPi * (1.0 - 0.125) * 1.2020569031595942854).epsilon(1e-14));
  for (double eps : {0.5, 1.0}) {
    for (double z : {0.5, 1.0}) {
      const auto tr = eval_multiplier_truncated(ProfileSpec::jump_smoothed(eps), cd(z), 200001);
      CHECK(std::abs(tr.value - jump_smoothed_multiplier(eps, cd(z))) <= tr.tail_bound);
    }
  }
  // off the axis: the direct sum against the same sum done here
  const cd z(0.8, 3.0);
  cd direct = 0.0;
  for (int j = 2000001; j >= 1; j -= 2) direct += 4.0 / kPi * std::pow(static_cast<double>(j), -1.5) * std::pow(cd(j), -z);
  CHECK(std::abs(jump_smoothed_multiplier(0.5, z) - direct) < 1e-10);

  // growth toward the pole at z = -eps
  const double eps = 0.5;
  double prev = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const double v = jump_smoothed_multiplier(eps, cd(-eps + std::pow(10.0, -k))).real();
    CHECK(v > prev);
    prev = v;
  }
  CHECK(prev > 1e5);
}
