#pragma once

// Scalar margin functions of the sufficient conditions, bracketed bisection
// on them, the named threshold recipes, and parameter scans / k-sweeps that
// tabulate the figure data.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dilbasis/criterion.hpp"
#include "dilbasis/torusmin.hpp"
#include "dilbasis/zeta.hpp"

namespace dilbasis {

// ---- margin functions (positive = condition satisfied) ---------------------

/// sin(pi a) - (pi^2/8 - 1): one-term criterion with the crude envelope.
double trapezoid_one_term_margin(double alpha);

/// 2 sin(pi a) + sum_{j=0}^{k} (1 - |sin((2j+1) pi a)|)/(2j+1)^2 - pi^2/8.
double trapezoid_partial_margin(double alpha, int k);

/// g^(1) - sum_{j >= 3} |g^(j)| scaled by a pi^2/4: odd j <= jmax summed
/// explicitly, the rest replaced by its mean value (2/pi) sum 1/j^2.
double trapezoid_tail_margin(double alpha, int jmax = 200001);

/// pi^2 int_0^a x/sin(pi x) dx + pi a log((1 + cos(a pi))/sin(a pi)) - 4 sin(a pi),
/// zero where sum of the odd coefficients equals 2 g^(1).
double trapezoid_sum_margin(double alpha);

/// Tail-condition value for the trapezoid on {1, 3, 5, 9, 25}.
double trapezoid_prime_square_margin(double alpha, int k, const TorusMinOptions& torus = {});

/// sin(pi b)/(pi b) - cos(pi b) - [(pi^3/96 - 1/pi)/b + (7/8) zeta3 - 1].
double cubic_one_term_margin(double beta, double zeta3_value = zeta3());

/// sin(pi b)/(pi b) - cos(pi b) - ((7/4) zeta3 - 2), from |h^(j)| <= 24/(j^3 pi^3 b^2).
double cubic_crude_margin(double beta, double zeta3_value = zeta3());

/// Tail-condition value for the cubic profile on prime_square_support(d).
double cubic_prime_square_margin(double beta, int d, int k, const TorusMinOptions& torus = {});

/// Main-part condition for the cubic profile (coefficients without the common
/// factor 12/pi^3): right side minus left side.
struct MainPartSides {
  double lhs = 0.0;
  double rhs = 0.0;
};
MainPartSides cubic_main_part_sides(double beta, int d);

/// s^(1) - sum_{j >= 3} |s^(j)| with odd j <= jmax explicit and the envelope
/// remainder sum_{j > jmax} phi_j subtracted.
struct PSineTailMargin {
  double margin = 0.0;
  double explicit_margin = 0.0;  // without the envelope remainder
  double tail_bound = 0.0;
};
PSineTailMargin psine_tail_margin(double p, int jmax = 4001);

/// |s^(3)| (s^(1) + s^(9)) - 4 s^(9) s^(1).
double psine_condition2_margin(double p);

/// Margin of the {1, 3, 9} three-term inequality at order k.
double psine_three_term_margin(double p, int k);

/// J_d(k, p): tail-condition value for the p-sine profile on prime_square_support(d).
double psine_prime_square_margin(double p, int d, int k, const TorusMinOptions& torus = {});

/// Sides of s^(1) > sum of |s^(j)| over the non-unit support elements.
MainPartSides psine_main_part_sides(double p, int d);

// ---- root finding ----------------------------------------------------------

struct RootResult {
  double root = 0.0;
  double lo = 0.0, hi = 0.0;  // final bracket
  double f_lo = 0.0, f_hi = 0.0;
  double residual = 0.0;      // margin at root
  int iterations = 0;
};

/// Bisection. Throws NumericalError if f(lo), f(hi) do not differ in sign or
/// the bracket does not shrink to 2 tol within max_iter halvings.
RootResult bisect(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-9,
                  int max_iter = 200);

struct RecipeOptions {
  int k = -1;  // -1: recipe default
  int d = -1;
  double tol = 1e-9;
  double zeta3 = 0.0;  // 0: library value
  TorusMinOptions torus;
};

struct ThresholdRecipe {
  std::string name;
  std::string parameter;    // "alpha", "beta" or "p"
  std::string description;  // the margin whose sign change is sought
  double lo = 0.0, hi = 0.0;
  double tol = 1e-9;
  int k = -1;  // -1 when the recipe has no order
  int d = 0;
  std::function<double(double)> margin;
};

/// Names accepted by make_recipe.
std::vector<std::string> recipe_names();

/// Throws std::invalid_argument for unknown names.
ThresholdRecipe make_recipe(const std::string& name, const RecipeOptions& opts = {});

struct ThresholdValue {
  std::string name;
  std::string parameter;
  std::string description;
  double value = 0.0;
  int k = -1;
  int d = 0;
  RootResult root;
};

ThresholdValue solve(const ThresholdRecipe& recipe);

/// Every named recipe solved with default options.
std::map<std::string, ThresholdValue> named_thresholds(const RecipeOptions& opts = {});

// ---- witness ---------------------------------------------------------------

struct WitnessResult {
  bool holds = false;
  double tail_sum = 0.0;  // sum_{j=3}^{jmax} |g^(j)|
  double first = 0.0;     // g^(1)
};

/// Whether sum_{j=3}^{jmax} |g_a^(j)| > g_a^(1).
WitnessResult alpha3_witness(double alpha = 0.04, int jmax = 111);

// ---- tables ----------------------------------------------------------------

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Evaluates fn on n equispaced points of [lo, hi]; row = {x, fn(x)...}.
/// Runs on `jobs` threads; the row order is the grid order.
Table scan(const std::function<std::vector<double>(double)>& fn, std::vector<std::string> columns, double lo,
           double hi, int n, int jobs = 1);

/// Roots of margin(x, k) in [lo, hi] for each k, one column per margin.
/// Brackets without a sign change yield NaN.
Table k_sweep(const std::vector<std::function<double(double, int)>>& margins, std::vector<std::string> columns,
              const std::vector<int>& ks, double lo, double hi, double tol = 1e-9, int jobs = 1);

struct FigureOptions {
  int n = 200;     // grid size of value scans
  int jobs = 1;
  double tol = 1e-9;
  int k_step = 0;  // 0: figure default for k-sweeps
  TorusMinOptions torus;
};

/// trapezoid-threshold-vs-k, trapezoid-partial-sum, trapezoid-prime-square,
/// cubic-threshold-vs-k, cubic-prime-square, cubic-main-part,
/// psine-threshold-vs-k, psine-main-part.
std::vector<std::string> figure_ids();

/// Tabulates one figure's data. Throws std::invalid_argument for unknown ids.
Table figure_table(const std::string& id, const FigureOptions& opts = {});

}  // namespace dilbasis
