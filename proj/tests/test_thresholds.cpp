#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dilbasis/errors.hpp"
#include "dilbasis/thresholds.hpp"

using namespace dilbasis;
constexpr double kPi = std::numbers::pi;

TEST_CASE("bisection") {
  const auto r = bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12);
  CHECK(r.root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.hi - r.lo <= 2e-12);
  CHECK(r.lo <= r.root);
  CHECK(r.root <= r.hi);
  CHECK(r.f_lo * r.f_hi <= 0.0);
  CHECK(r.iterations > 0);

  const auto dec = bisect([](double x) { return 1.0 - x; }, 0.0, 3.0);
  CHECK(dec.root == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0), NumericalError);
  CHECK_THROWS_AS(bisect([](double x) { return x; }, -1.0, 2.0, 1e-30, 5), NumericalError);
  CHECK_THROWS_AS(bisect([](double x) { return x; }, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("closed-form one-term threshold") {
  const auto v = solve(make_recipe("alpha0"));
  CHECK(v.value == doctest::Approx(std::asin(kPi * kPi / 8 - 1) / kPi).epsilon(1e-8));
  CHECK(v.parameter == "alpha");
  CHECK_THROWS_AS(make_recipe("alpha9"), std::invalid_argument);
}

TEST_CASE("margins change sign at the roots") {
  for (const std::string name : {"alpha0", "alpha1", "alpha4", "beta0", "betaTilde0", "p4"}) {
    const auto recipe = make_recipe(name);
    const auto v = solve(recipe);
    INFO(name);
    CHECK(recipe.margin(v.value - 1e-4) * recipe.margin(v.value + 1e-4) < 0.0);
  }
}

TEST_CASE("recipe overrides") {
  RecipeOptions opts;
  opts.k = 50;
  CHECK(make_recipe("alpha1", opts).k == 50);
  CHECK(make_recipe("alpha1").k == 500);
  opts.d = 1;
  CHECK(make_recipe("beta2", opts).d == 1);
}

TEST_CASE("a perturbed zeta(3) moves the cubic threshold") {
  RecipeOptions opts;
  opts.zeta3 = 1.21;
  const double moved = solve(make_recipe("beta0", opts)).value;
  CHECK(std::abs(moved - 0.159059) > 1e-4);
}

TEST_CASE("tail-sum witness") {
  const auto w = alpha3_witness(0.04, 111);
  CHECK(w.holds);
  CHECK_FALSE(alpha3_witness(0.05, 111).holds);
  const auto shorter = alpha3_witness(0.04, 11);
  CHECK(shorter.tail_sum < w.tail_sum);
  CHECK(shorter.first == w.first);
}

TEST_CASE("scans and sweeps") {
  auto fn = [](double x) { return std::vector<double>{x * x, std::sin(x)}; };
  const auto a = scan(fn, {"x", "sq", "sin"}, 0.0, 1.0, 11, 1);
  const auto b = scan(fn, {"x", "sq", "sin"}, 0.0, 1.0, 11, 4);
  CHECK(a.rows == b.rows);
  CHECK(a.rows.size() == 11);
  CHECK(a.rows.front()[0] == 0.0);
  CHECK(a.rows.back()[0] == 1.0);

  const auto t = k_sweep({[](double x, int k) { return x - 0.1 * k; }}, {"k", "root"}, {1, 5, 20}, 0.0, 1.0);
  CHECK(t.rows[0][1] == doctest::Approx(0.1).epsilon(1e-8));
  CHECK(t.rows[1][1] == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(std::isnan(t.rows[2][1]));
}

TEST_CASE("figure tables") {
  CHECK(figure_ids().size() == 8);
  CHECK_THROWS_AS(figure_table("5"), std::invalid_argument);
  FigureOptions opts;
  opts.n = 15;
  const auto t = figure_table("trapezoid-partial-sum", opts);
  CHECK(t.columns == std::vector<std::string>{"alpha", "lhs", "rhs"});
  CHECK(t.rows.front()[0] == doctest::Approx(0.01));
  CHECK(t.rows.back()[0] == doctest::Approx(0.08));
  // at alpha = 0.05 the left side exceeds pi^2/8
  CHECK(trapezoid_partial_margin(0.05, 500) > 0.0);
  CHECK(t.rows.back()[1] > kPi * kPi / 8);
}
