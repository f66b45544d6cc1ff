#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "dilbasis/criterion.hpp"
#include "dilbasis/profiles.hpp"

using namespace dilbasis;
constexpr double kPi = 3.14159265358979323846;

TEST_CASE("one-term trapezoid verdicts") {
  const SupportSet one({1});
  // k = 1 is the bare one-term test; k = 0 keeps no coefficient on the left
  CHECK(check_multi_term(ProfileSpec::trapezoid(0.08), one, 1).verdict == Verdict::Equivalent);
  CHECK(check_multi_term(ProfileSpec::trapezoid(0.07), one, 1).verdict == Verdict::Inconclusive);
  CHECK(check_multi_term(ProfileSpec::trapezoid(0.08), one, 0).verdict == Verdict::Inconclusive);
  CHECK(check_multi_term(ProfileSpec::trapezoid(0.05), one, 500).verdict == Verdict::Equivalent);
  CHECK(check_multi_term(ProfileSpec::trapezoid(0.04), one, 500).verdict == Verdict::Inconclusive);
}

TEST_CASE("p = 2 sine on the trivial support") {
  const auto r = check_multi_term(ProfileSpec::psine(2.0), SupportSet({1}), 0);
  CHECK(r.verdict == Verdict::Equivalent);
  CHECK(r.cond2_value == doctest::Approx(2.0 - kPi / 2).epsilon(1e-10));
  CHECK(r.mu == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.phi == doctest::Approx(kPi / 2).epsilon(1e-14));
}

TEST_CASE("cubic on {1, 3, 9}") {
  const auto r = check_multi_term(ProfileSpec::cubic(0.035), SupportSet({1, 3, 9}), 100);
  CHECK(r.verdict == Verdict::Equivalent);
  CHECK(r.cond1_margin > 0.0);
  CHECK(r.support == std::vector<std::int64_t>{1, 3, 9});
  CHECK(r.support_coeffs.size() == 3);
}

TEST_CASE("the tail condition is monotone in k") {
  for (const auto& s : {ProfileSpec::trapezoid(0.04), ProfileSpec::cubic(0.05), ProfileSpec::jump_smoothed(0.3),
                        ProfileSpec::psine(1.04)}) {
    const CoefficientSeries series(s, 301);
    double prev = -1e300;
    for (int k = 0; k <= 301; k += 7) {
      const auto r = check_multi_term(series, SupportSet({1, 3, 9}), k);
      INFO(s.name() << " " << s.param() << ", k = " << k);
      CHECK(r.cond2_value >= prev - 1e-15);
      CHECK(r.correction >= 0.0);
      prev = r.cond2_value;
    }
  }
}

TEST_CASE("conservative mu") {
  const auto r = check_multi_term(ProfileSpec::trapezoid(0.035), SupportSet({1, 3, 5, 9, 25}), 50);
  CHECK(r.torus.method == MinMethod::GridRefine);
  CHECK(r.mu < r.mu_raw);
  CHECK(r.mu_raw - r.mu <= r.torus.refine_tolerance + 1e-16);
}

TEST_CASE("two-term form agrees with the general check on {1, p, p^2}") {
  for (const auto& s : {ProfileSpec::psine(1.05), ProfileSpec::psine(1.2), ProfileSpec::trapezoid(0.3),
                        ProfileSpec::cubic(0.1), ProfileSpec::cubic(0.3), ProfileSpec::jump_smoothed(1.0)}) {
    for (std::int64_t prime : {3, 5}) {
      const auto two = check_two_term(s, prime);
      if (!two.coefficient_gate) continue;
      const auto multi = check_multi_term(s, SupportSet({1, prime, prime * prime}), 0);
      INFO(s.name() << " " << s.param() << ", prime " << prime);
      CHECK(two.mu == doctest::Approx(multi.mu_raw).epsilon(1e-8));
      CHECK(two.margin == doctest::Approx(multi.cond2_value).epsilon(1e-7).scale(1.0));
      if (std::abs(two.margin) > 1e-6) CHECK(two.verdict == multi.verdict);
    }
  }
}

TEST_CASE("two-term form from explicit coefficients") {
  const auto r = two_term_from_coefficients(1.0, -0.5, 0.1, 0.0);
  CHECK(r.coefficient_gate);
  CHECK(r.regime == 1);
  CHECK(r.mu == doctest::Approx(0.6));
  CHECK(r.lhs == doctest::Approx(0.5));
  CHECK(r.rhs == doctest::Approx(1.1));
  CHECK(r.verdict == Verdict::Equivalent);

  const auto r2 = two_term_from_coefficients(1.0, 0.1, 0.5, 0.4);
  CHECK(r2.regime == 2);
  CHECK(r2.mu == doctest::Approx(0.5 * std::sqrt(1 - 0.01 / 2)));
  CHECK(r2.verdict == Verdict::Equivalent);
  CHECK(two_term_from_coefficients(1.0, 0.1, 0.5, 0.5).verdict == Verdict::Inconclusive);

  const auto gate = two_term_from_coefficients(1.0, 0.2, -0.1, 0.0);
  CHECK_FALSE(gate.coefficient_gate);
  CHECK(gate.verdict == Verdict::Inconclusive);
  CHECK(gate.reason == "coefficient gate");
}

TEST_CASE("p-sine on the prime-square supports") {
  CHECK(psine_multi_term_check(1.05, 2, 251).verdict == Verdict::Equivalent);
  CHECK(psine_multi_term_check(1.02, 2, 251).verdict == Verdict::Inconclusive);
  const auto r = psine_multi_term_check(2.0, 1, 9);
  CHECK(r.verdict == Verdict::Equivalent);
  // s^(1) = 1, all other coefficients vanish, phi_j = 4/(pi j^2)
  double head = 0.0;
  for (int j = 1; j <= 9; j += 2) head += 4.0 / (kPi * j * j);
  CHECK(r.value == doctest::Approx(1.0 - kPi / 2 + head).epsilon(1e-9));
  CHECK_THROWS_AS(prime_square_support(3), std::invalid_argument);
}

TEST_CASE("p-sine three-term form") {
  CHECK(psine_three_term_check(1.0390, 61).verdict == Verdict::Equivalent);
  CHECK(psine_three_term_check(1.0380, 61).verdict == Verdict::Inconclusive);
  const auto r = psine_three_term_check(1.05, 9);
  CHECK(std::isfinite(r.margin));
  CHECK(r.s9 > 0.0);
  CHECK(r.lhs > 0.0);
  CHECK_THROWS_AS(psine_three_term_check(1.2, 61), std::domain_error);
  CHECK_THROWS_AS(psine_three_term_check(1.05, 8), std::invalid_argument);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(check_multi_term(ProfileSpec::trapezoid(0.1), SupportSet({1}), -1), std::invalid_argument);
  CHECK_THROWS_AS(check_multi_term(ProfileSpec::jump(), SupportSet({1}), 0), std::invalid_argument);
  const CoefficientSeries short_series(ProfileSpec::trapezoid(0.1), 5);
  CHECK_THROWS_AS(check_multi_term(short_series, SupportSet({1, 3, 9}), 0), std::invalid_argument);
}
