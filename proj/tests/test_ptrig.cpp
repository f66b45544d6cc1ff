#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "dilbasis/ptrig.hpp"
#include "oracles.hpp"

using namespace dilbasis;
using oracle::pi;

TEST_CASE("PExponent validates and computes the conjugate") {
  CHECK_THROWS_AS(PExponent(1.0), std::domain_error);
  CHECK_THROWS_AS(PExponent(0.5), std::domain_error);
  CHECK_THROWS_AS(PExponent(std::nan("")), std::domain_error);
  CHECK(PExponent(2.0).conjugate() == doctest::Approx(2.0));
  CHECK(PExponent(1.5).conjugate() == doctest::Approx(3.0));
}

TEST_CASE("pi_p closed form and monotonicity") {
  CHECK(pi_p(PExponent(2.0)) == doctest::Approx(pi).epsilon(1e-15));
  CHECK(pi_p(PExponent(1.5)) == doctest::Approx(2.0 * pi / (1.5 * std::sin(2.0 * pi / 3.0))).epsilon(1e-14));
  CHECK(pi_p(PExponent(1.5)) == doctest::Approx(2.0 * oracle::F_p_quadrature(1.5, 1.0)).epsilon(1e-10));
  double prev = pi_p(PExponent(1.01));
  CHECK(prev > pi_p(PExponent(1.1)));
  CHECK(pi_p(PExponent(1.1)) > pi);
  for (double p = 1.02; p < 6.0; p += 0.05) {
    const double cur = pi_p(PExponent(p));
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("F_p at p = 2 is arcsin") {
  CHECK(F_p(PExponent(2.0), 1.0) == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(F_p(PExponent(2.0), 0.5) == doctest::Approx(pi / 6).epsilon(1e-15));
  for (int i = 0; i <= 100; ++i) {
    const double y = i / 100.0;
    CHECK(F_p(PExponent(2.0), y) == doctest::Approx(std::asin(y)).epsilon(1e-14));
  }
}

TEST_CASE("F_p against the incomplete beta function") {
  for (double p : {1.001, 1.01, 1.05, 1.1, 1.5, 2.5, 4.0, 10.0}) {
    const PTrigContext ctx{PExponent(p)};
    for (int i = 0; i <= 200; ++i) {
      const double y = i / 200.0;
      INFO("p = " << p << ", y = " << y);
      CHECK(ctx.F(y) == doctest::Approx(oracle::F_p(p, y)).epsilon(1e-12));
    }
    CHECK(ctx.pi_p() == doctest::Approx(oracle::pi_p(p)).epsilon(1e-13));
  }
}

TEST_CASE("F_p at p = 1.5, y = 0.9 against quadrature") {
  CHECK(F_p(PExponent(1.5), 0.9) == doctest::Approx(oracle::F_p_quadrature(1.5, 0.9)).epsilon(1e-12));
  CHECK(I_p(PExponent(1.5), 0.5) ==
        doctest::Approx(2.0 * oracle::F_p_quadrature(1.5, 0.5) / oracle::pi_p(1.5)).epsilon(1e-12));
}

TEST_CASE("I_p normalization") {
  for (double p : {1.01, 1.5, 2.0, 7.0}) {
    CHECK(I_p(PExponent(p), 0.0) == 0.0);
    CHECK(I_p(PExponent(p), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(I_p(PExponent(1.5), 1.5), std::domain_error);
  CHECK_THROWS_AS(I_p(PExponent(1.5), -0.1), std::domain_error);
}

TEST_CASE("sin_p special values and symmetry") {
  CHECK(sin_p(PExponent(2.0), pi / 2) == doctest::Approx(1.0).epsilon(1e-15));
  for (double p : {1.05, 1.5, 3.0}) {
    const PExponent e(p);
    const double pp = pi_p(e);
    CHECK(sin_p(e, 0.0) == 0.0);
    CHECK(sin_p(e, pp / 2) == doctest::Approx(1.0).epsilon(1e-14));
    for (double x : {0.1, 0.7, 1.3}) {
      CHECK(sin_p(e, pp - x) == doctest::Approx(sin_p(e, x)).epsilon(1e-13));
      CHECK(sin_p(e, -x) == doctest::Approx(-sin_p(e, x)).epsilon(1e-13));
      CHECK(sin_p(e, x + 2 * pp) == doctest::Approx(sin_p(e, x)).epsilon(1e-12));
    }
  }
  for (int i = 0; i <= 50; ++i) {
    const double x = 2 * pi * i / 50.0;
    CHECK(sin_p(PExponent(2.0), x) == doctest::Approx(std::sin(x)).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("sin_p at pi_p/4 against bisection on the beta form") {
  const double p = 1.5;
  const double x = oracle::pi_p(p) / 4;
  const double want = oracle::sin_p_first_quarter(p, x);
  CHECK(sin_p(PExponent(p), x) == doctest::Approx(want).epsilon(1e-12));
  CHECK(oracle::F_p(p, want) == doctest::Approx(x).epsilon(1e-12));
}

TEST_CASE("inversion round trip") {
  for (double p : {1.001, 1.01, 1.04, 1.2, 1.5, 2.0, 3.0, 8.0}) {
    const PTrigContext ctx{PExponent(p)};
    for (int i = 0; i <= 400; ++i) {
      const double y = i / 400.0;
      INFO("p = " << p << ", y = " << y);
      CHECK(std::abs(ctx.sin(ctx.F(y)) - y) < 1e-10);
      CHECK(std::abs(ctx.I_inverse(ctx.I(y)) - y) < 1e-10);
    }
  }
}

TEST_CASE("ratio of normalized arcsines lies strictly between 1 and pi_p/pi_q") {
  auto check_point = [](double p, double q, double y) {
    const auto [ratio, bound] = i_p_ratio_bounds(PExponent(p), PExponent(q), y);
    INFO("p = " << p << ", q = " << q << ", y = " << y);
    CHECK(ratio > 1.0);
    CHECK(ratio < bound);
    CHECK(bound == doctest::Approx(oracle::pi_p(p) / oracle::pi_p(q)).epsilon(1e-12));
  };
  check_point(1.5, 2.0, 0.5);
  check_point(1.1, 3.0, 0.9);
  for (double p : {1.01, 1.1, 1.5, 2.0, 3.0}) {
    for (double q : {1.05, 1.3, 2.0, 2.5, 5.0}) {
      if (q <= p) continue;
      for (int i = 1; i < 40; ++i) check_point(p, q, i / 40.0);
    }
  }
  const auto [near_one, bound] = i_p_ratio_bounds(PExponent(1.5), PExponent(2.0), 1.0 - 1e-12);
  CHECK(near_one == doctest::Approx(1.0).epsilon(1e-4));
  (void)bound;
}

TEST_CASE("I_p is increasing and convex") {
  for (double p : {1.001, 1.01, 1.05, 1.3, 2.0, 4.0}) {
    const PTrigContext ctx{PExponent(p)};
    constexpr int n = 500;
    std::vector<double> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = ctx.I(static_cast<double>(i) / n);
    for (int i = 1; i <= n; ++i) CHECK(v[i] > v[i - 1]);
    for (int i = 1; i < n; ++i) {
      INFO("p = " << p << ", i = " << i);
      CHECK(v[i + 1] - 2 * v[i] + v[i - 1] >= -1e-14);
    }
  }
}
