#include "dilbasis/thresholds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "dilbasis/errors.hpp"
#include "dilbasis/profiles.hpp"

namespace dilbasis {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs body(i) for i in [0, n) on up to `jobs` threads, each index exactly once.
void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
  jobs = std::clamp(jobs, 1, std::max(1, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (int i = next++; i < n && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

double odd_inverse_squares(int jmax) {
  double acc = 0.0;
  for (int j = (jmax % 2 == 0 ? jmax - 1 : jmax); j >= 1; j -= 2) acc += 1.0 / (static_cast<double>(j) * j);
  return acc;
}

// sin(x)/x - cos(x) without cancellation for small x.
double sinc_minus_cos(double x) {
  if (std::abs(x) < 1e-2) {
    const double x2 = x * x;
    return x2 / 3.0 * (1.0 - x2 / 10.0 * (1.0 - x2 / 28.0));
  }
  return std::sin(x) / x - std::cos(x);
}

std::vector<int> sweep_ks(int first, int last, int step) {
  std::vector<int> ks;
  for (int k = first; k <= last; k += step) ks.push_back(k);
  return ks;
}

}  // namespace

double trapezoid_one_term_margin(double alpha) { return std::sin(kPi * alpha) - (kPi * kPi / 8.0 - 1.0); }

double trapezoid_partial_margin(double alpha, int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  double acc = 0.0;
  for (int j = k; j >= 0; --j) {
    const double m = 2.0 * j + 1.0;
    acc += (1.0 - std::abs(std::sin(m * kPi * alpha))) / (m * m);
  }
  return 2.0 * std::sin(kPi * alpha) + acc - kPi * kPi / 8.0;
}

double trapezoid_tail_margin(double alpha, int jmax) {
  if (jmax < 3) throw std::invalid_argument("jmax must be >= 3");
  double acc = 0.0;
  for (int j = 3; j <= jmax; j += 2) acc += std::abs(std::sin(j * kPi * alpha)) / (static_cast<double>(j) * j);
  const double rest = kPi * kPi / 8.0 - odd_inverse_squares(jmax);
  return std::sin(kPi * alpha) - acc - (2.0 / kPi) * rest;
}

double trapezoid_sum_margin(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) throw std::domain_error("trapezoid_sum_margin needs 0 < alpha < 1/2");
  const double a = alpha * kPi;
  return kPi * kPi * integral_x_over_sin(alpha) + a * std::log((1.0 + std::cos(a)) / std::sin(a)) -
         4.0 * std::sin(a);
}

double trapezoid_prime_square_margin(double alpha, int k, const TorusMinOptions& torus) {
  CriterionOptions opts;
  opts.torus = torus;
  return check_multi_term(ProfileSpec::trapezoid(alpha), prime_square_support(2), k, opts).cond2_value;
}

double cubic_one_term_margin(double beta, double zeta3_value) {
  if (!(beta > 0.0 && beta < 0.5)) throw std::domain_error("cubic_one_term_margin needs 0 < beta < 1/2");
  const double lhs = (kPi * kPi * kPi / 96.0 - 1.0 / kPi) / beta + 0.875 * zeta3_value - 1.0;
  return sinc_minus_cos(kPi * beta) - lhs;
}

double cubic_crude_margin(double beta, double zeta3_value) {
  if (!(beta > 0.0 && beta < 0.5)) throw std::domain_error("cubic_crude_margin needs 0 < beta < 1/2");
  return sinc_minus_cos(kPi * beta) - (1.75 * zeta3_value - 2.0);
}

double cubic_prime_square_margin(double beta, int d, int k, const TorusMinOptions& torus) {
  CriterionOptions opts;
  opts.torus = torus;
  return check_multi_term(ProfileSpec::cubic(beta), prime_square_support(d), k, opts).cond2_value;
}

MainPartSides cubic_main_part_sides(double beta, int d) {
  if (!(beta > 0.0 && beta < 0.5)) throw std::domain_error("cubic_main_part_sides needs 0 < beta < 1/2");
  // |h^(j)| pi^3/12 = |sin(j pi b)/(j^4 pi b^2) - cos(j pi b)/(j^3 b)|
  auto scaled = [beta](double j) {
    return std::sin(j * kPi * beta) / (j * j * j * j * kPi * beta * beta) - std::cos(j * kPi * beta) / (j * j * j * beta);
  };
  MainPartSides out;
  for (auto n : prime_square_support(d).elements()) {
    if (n != 1) out.lhs += std::abs(scaled(static_cast<double>(n)));
  }
  out.rhs = scaled(1.0);
  return out;
}

PSineTailMargin psine_tail_margin(double p, int jmax) {
  if (jmax < 3) throw std::invalid_argument("jmax must be >= 3");
  const CoefficientSeries series(ProfileSpec::psine(p), jmax);
  double rest = 0.0;
  double head = 0.0;
  for (int j = 1; j <= jmax; j += 2) {
    head += series.envelope(j);
    if (j >= 3) rest += std::abs(series.coeff(j));
  }
  PSineTailMargin out;
  out.explicit_margin = series.coeff(1) - rest;
  out.tail_bound = std::max(0.0, series.envelope_sum() - head);
  out.margin = out.explicit_margin - out.tail_bound;
  return out;
}

double psine_condition2_margin(double p) {
  const CoefficientSeries series(ProfileSpec::psine(p), 9);
  const double s1 = series.coeff(1), s3 = series.coeff(3), s9 = series.coeff(9);
  return std::abs(s3) * (s1 + s9) - 4.0 * s9 * s1;
}

double psine_three_term_margin(double p, int k) { return psine_three_term_check(p, k).margin; }

double psine_prime_square_margin(double p, int d, int k, const TorusMinOptions& torus) {
  CriterionOptions opts;
  opts.torus = torus;
  return psine_multi_term_check(p, d, k, opts).value;
}

MainPartSides psine_main_part_sides(double p, int d) {
  const auto support = prime_square_support(d);
  const CoefficientSeries series(ProfileSpec::psine(p), static_cast<int>(support.elements().back()));
  MainPartSides out;
  for (auto n : support.elements()) {
    if (n != 1) out.lhs += std::abs(series.coeff(static_cast<int>(n)));
  }
  out.rhs = series.coeff(1);
  return out;
}

RootResult bisect(const std::function<double(double)>& f, double lo, double hi, double tol, int max_iter) {
  if (!(lo < hi)) throw std::invalid_argument("bisect needs lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("bisect needs tol > 0");
  RootResult r;
  r.lo = lo;
  r.hi = hi;
  r.f_lo = f(lo);
  r.f_hi = f(hi);
  if (!std::isfinite(r.f_lo) || !std::isfinite(r.f_hi) || (r.f_lo > 0.0) == (r.f_hi > 0.0)) {
    throw NumericalError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                             "]: f(lo) = " + std::to_string(r.f_lo) + ", f(hi) = " + std::to_string(r.f_hi),
                         std::min(std::abs(r.f_lo), std::abs(r.f_hi)));
  }
  while (r.hi - r.lo > 2.0 * tol) {
    if (r.iterations >= max_iter) {
      throw NumericalError("bisection iteration cap reached", r.hi - r.lo);
    }
    const double mid = 0.5 * (r.lo + r.hi);
    const double fm = f(mid);
    ++r.iterations;
    if (fm == 0.0) {
      r.lo = r.hi = mid;
      r.f_lo = r.f_hi = 0.0;
      break;
    }
    if ((fm > 0.0) == (r.f_lo > 0.0)) {
      r.lo = mid;
      r.f_lo = fm;
    } else {
      r.hi = mid;
      r.f_hi = fm;
    }
  }
  r.root = 0.5 * (r.lo + r.hi);
  r.residual = std::abs(r.f_lo) < std::abs(r.f_hi) ? r.f_lo : r.f_hi;
  return r;
}

std::vector<std::string> recipe_names() {
  return {"alpha0", "alpha1", "alpha2", "alpha4", "alpha5", "beta0", "betaTilde0", "beta1",
          "beta2",  "p3",     "p4",     "crossing61", "crossing63", "p5"};
}

ThresholdRecipe make_recipe(const std::string& name, const RecipeOptions& opts) {
  ThresholdRecipe r;
  r.name = name;
  r.tol = opts.tol;
  const double z3 = opts.zeta3 > 0.0 ? opts.zeta3 : zeta3();
  const TorusMinOptions torus = opts.torus;
  auto order = [&](int fallback) { return opts.k >= 0 ? opts.k : fallback; };
  auto dim = [&](int fallback) { return opts.d >= 0 ? opts.d : fallback; };

  if (name == "alpha0") {
    r.parameter = "alpha";
    r.description = "sin(pi a) - (pi^2/8 - 1)";
    r.lo = 0.01, r.hi = 0.49;
    r.margin = [](double a) { return trapezoid_one_term_margin(a); };
  } else if (name == "alpha1") {
    r.parameter = "alpha";
    r.k = order(500);
    r.description = "2 sin(pi a) + sum_{j<=k} (1 - |sin((2j+1) pi a)|)/(2j+1)^2 - pi^2/8";
    r.lo = 0.01, r.hi = 0.49;
    r.margin = [k = r.k](double a) { return trapezoid_partial_margin(a, k); };
  } else if (name == "alpha2") {
    r.parameter = "alpha";
    r.k = order(200001);
    r.description = "g(1) - sum_{j>=3} |g(j)|, explicit to odd j <= k, mean-value remainder";
    r.lo = 0.01, r.hi = 0.49;
    r.margin = [k = r.k](double a) { return trapezoid_tail_margin(a, k); };
  } else if (name == "alpha4") {
    r.parameter = "alpha";
    r.description = "pi^2 int_0^a x/sin(pi x) dx + pi a log((1+cos(a pi))/sin(a pi)) - 4 sin(a pi)";
    r.lo = 0.01, r.hi = 0.49;
    r.margin = [](double a) { return trapezoid_sum_margin(a); };
  } else if (name == "alpha5") {
    r.parameter = "alpha";
    r.k = order(50);
    r.d = 2;
    r.description = "tail-condition value, trapezoid on {1,3,5,9,25}";
    r.lo = 0.02, r.hi = 0.04;
    r.margin = [k = r.k, torus](double a) { return trapezoid_prime_square_margin(a, k, torus); };
  } else if (name == "beta0") {
    r.parameter = "beta";
    r.description = "sin(pi b)/(pi b) - cos(pi b) - [(pi^3/96 - 1/pi)/b + (7/8) zeta(3) - 1]";
    r.lo = 0.01, r.hi = 0.49;
    r.margin = [z3](double b) { return cubic_one_term_margin(b, z3); };
  } else if (name == "betaTilde0") {
    r.parameter = "beta";
    r.description = "sin(pi b)/(pi b) - cos(pi b) - ((7/4) zeta(3) - 2)";
    r.lo = 0.01, r.hi = 0.49;
    r.margin = [z3](double b) { return cubic_crude_margin(b, z3); };
  } else if (name == "beta1" || name == "beta2") {
    r.parameter = "beta";
    r.k = order(100);
    r.d = dim(name == "beta1" ? 1 : 2);
    r.description = "tail-condition value, cubic profile on the prime-square support";
    r.lo = 0.01, r.hi = 0.16;
    r.margin = [k = r.k, d = r.d, torus](double b) { return cubic_prime_square_margin(b, d, k, torus); };
  } else if (name == "p3") {
    r.parameter = "p";
    r.k = order(4001);
    r.description = "s(1) - sum_{j>=3} |s(j)|, explicit to odd j <= k, envelope remainder";
    r.lo = 1.01, r.hi = 1.09;
    r.margin = [k = r.k](double p) { return psine_tail_margin(p, k).margin; };
  } else if (name == "p4") {
    r.parameter = "p";
    r.description = "|s(3)| (s(1) + s(9)) - 4 s(9) s(1)";
    r.lo = 1.01, r.hi = 1.09;
    r.margin = [](double p) { return psine_condition2_margin(p); };
  } else if (name == "crossing61" || name == "crossing63") {
    r.parameter = "p";
    r.k = order(name == "crossing61" ? 61 : 63);
    r.d = 1;
    r.description = "three-term inequality on {1,3,9} with mu = s(1) + s(9) - |s(3)|";
    r.lo = 1.01, r.hi = 1.09;
    r.margin = [k = r.k](double p) { return psine_three_term_margin(p, k); };
  } else if (name == "p5") {
    r.parameter = "p";
    r.k = order(251);
    r.d = dim(2);
    r.description = "tail-condition value, p-sine profile on the prime-square support";
    r.lo = 1.01, r.hi = 1.09;
    r.margin = [k = r.k, d = r.d, torus](double p) { return psine_prime_square_margin(p, d, k, torus); };
  } else {
    throw std::invalid_argument("unknown threshold name '" + name + "'");
  }
  return r;
}

ThresholdValue solve(const ThresholdRecipe& recipe) {
  ThresholdValue v;
  v.name = recipe.name;
  v.parameter = recipe.parameter;
  v.description = recipe.description;
  v.k = recipe.k;
  v.d = recipe.d;
  v.root = bisect(recipe.margin, recipe.lo, recipe.hi, recipe.tol);
  v.value = v.root.root;
  return v;
}

std::map<std::string, ThresholdValue> named_thresholds(const RecipeOptions& opts) {
  std::map<std::string, ThresholdValue> out;
  for (const auto& name : recipe_names()) out.emplace(name, solve(make_recipe(name, opts)));
  return out;
}

WitnessResult alpha3_witness(double alpha, int jmax) {
  if (!(alpha > 0.0 && alpha <= 0.5)) throw std::domain_error("alpha3_witness needs 0 < alpha <= 1/2");
  const auto spec = ProfileSpec::trapezoid(alpha);
  WitnessResult w;
  w.first = coeff(spec, 1);
  for (int j = 3; j <= jmax; ++j) w.tail_sum += std::abs(coeff(spec, j));
  w.holds = w.tail_sum > w.first;
  return w;
}

Table scan(const std::function<std::vector<double>(double)>& fn, std::vector<std::string> columns, double lo,
           double hi, int n, int jobs) {
  if (n < 2) throw std::invalid_argument("scan needs n >= 2");
  Table t;
  t.columns = std::move(columns);
  t.rows.resize(n);
  parallel_for(n, jobs, [&](int i) {
    const double x = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
    std::vector<double> row{x};
    auto values = fn(x);
    row.insert(row.end(), values.begin(), values.end());
    t.rows[i] = std::move(row);
  });
  return t;
}

Table k_sweep(const std::vector<std::function<double(double, int)>>& margins, std::vector<std::string> columns,
              const std::vector<int>& ks, double lo, double hi, double tol, int jobs) {
  Table t;
  t.columns = std::move(columns);
  const int m = static_cast<int>(margins.size());
  const int n = static_cast<int>(ks.size());
  t.rows.assign(n, std::vector<double>(m + 1, kNaN));
  parallel_for(n * m, jobs, [&](int idx) {
    const int i = idx / m;
    const int c = idx % m;
    const int k = ks[i];
    t.rows[i][0] = k;
    try {
      t.rows[i][c + 1] = bisect([&](double x) { return margins[c](x, k); }, lo, hi, tol).root;
    } catch (const NumericalError&) {
      t.rows[i][c + 1] = kNaN;
    }
  });
  return t;
}

std::vector<std::string> figure_ids() {
  return {"trapezoid-threshold-vs-k", "trapezoid-partial-sum", "trapezoid-prime-square", "cubic-threshold-vs-k", "cubic-prime-square", "cubic-main-part", "psine-threshold-vs-k", "psine-main-part"};
}

Table figure_table(const std::string& id, const FigureOptions& opts) {
  const TorusMinOptions torus = opts.torus;
  const double quarter = kPi * kPi / 8.0;
  if (id == "trapezoid-threshold-vs-k") {
    const int step = opts.k_step > 0 ? opts.k_step : 1;
    auto ks = sweep_ks(1, 100, step);
    for (int k = 110; k <= 500; k += (opts.k_step > 0 ? std::max(step, 10) : 10)) ks.push_back(k);
    return k_sweep({[](double a, int k) { return trapezoid_partial_margin(a, k); }}, {"k", "alpha"}, ks, 0.01,
                   0.49, opts.tol, opts.jobs);
  }
  if (id == "trapezoid-partial-sum") {
    return scan([&](double a) { return std::vector<double>{trapezoid_partial_margin(a, 500) + quarter, quarter}; },
                {"alpha", "lhs", "rhs"}, 0.01, 0.08, opts.n, opts.jobs);
  }
  if (id == "trapezoid-prime-square") {
    return scan([&](double a) { return std::vector<double>{trapezoid_prime_square_margin(a, 50, torus)}; },
                {"alpha", "lhs"}, 0.02, 0.04, opts.n, opts.jobs);
  }
  if (id == "cubic-threshold-vs-k") {
    const auto ks = sweep_ks(1, 100, opts.k_step > 0 ? opts.k_step : 1);
    return k_sweep({[torus](double b, int k) { return cubic_prime_square_margin(b, 1, k, torus); },
                    [torus](double b, int k) { return cubic_prime_square_margin(b, 2, k, torus); }},
                   {"k", "beta_d1", "beta_d2"}, ks, 0.01, 0.49, opts.tol, opts.jobs);
  }
  if (id == "cubic-prime-square") {
    return scan(
        [&](double b) {
          return std::vector<double>{cubic_prime_square_margin(b, 1, 100, torus),
                                     cubic_prime_square_margin(b, 2, 100, torus)};
        },
        {"beta", "H1", "H2"}, 0.01, 0.16, opts.n, opts.jobs);
  }
  if (id == "cubic-main-part") {
    return scan(
        [](double b) {
          const auto s = cubic_main_part_sides(b, 2);
          return std::vector<double>{s.lhs, s.rhs};
        },
        {"beta", "lhs", "rhs"}, 0.02, 0.16, opts.n, opts.jobs);
  }
  if (id == "psine-threshold-vs-k") {
    const auto ks = sweep_ks(11, 251, opts.k_step > 0 ? opts.k_step : 10);
    return k_sweep({[torus](double p, int k) { return psine_prime_square_margin(p, 2, k, torus); }}, {"k", "p"},
                   ks, 1.0005, 1.2, opts.tol, opts.jobs);
  }
  if (id == "psine-main-part") {
    return scan(
        [](double p) {
          const auto s = psine_main_part_sides(p, 2);
          return std::vector<double>{s.lhs, s.rhs};
        },
        {"p", "lhs", "rhs"}, 1.01, 1.1, opts.n, opts.jobs);
  }
  throw std::invalid_argument("unknown figure id '" + id + "'");
}

}  // namespace dilbasis
