#include "dilbasis/torusmin.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace dilbasis {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double t) {
  double r = std::fmod(t + kPi, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  return r - kPi;
}

// Powers e^{i nu theta_g} for every axis, grid index and exponent.
struct PowerTable {
  int n = 0;
  std::vector<int> max_nu;                          // per axis
  std::vector<std::vector<std::complex<double>>> v;  // [axis][g * (max_nu+1) + nu]

  std::complex<double> at(int axis, int g, int nu) const { return v[axis][g * (max_nu[axis] + 1) + nu]; }
};

PowerTable build_powers(const SupportSet& support, int n) {
  const int d = support.dimension();
  PowerTable table;
  table.n = n;
  table.max_nu.assign(d, 0);
  for (std::size_t k = 0; k < support.size(); ++k) {
    const auto& nu = support.exponents_at(k);
    for (int i = 0; i < d; ++i) table.max_nu[i] = std::max(table.max_nu[i], nu[i]);
  }
  table.v.resize(d);
  for (int i = 0; i < d; ++i) {
    const int stride = table.max_nu[i] + 1;
    table.v[i].resize(static_cast<std::size_t>(n) * stride);
    for (int g = 0; g < n; ++g) {
      const double theta = -kPi + 2.0 * kPi * g / n;
      for (int e = 0; e < stride; ++e) table.v[i][g * stride + e] = std::polar(1.0, e * theta);
    }
  }
  return table;
}

double squared_modulus(const DirichletPolynomial& poly, std::span<const double> angles) {
  return std::norm(eval_poly(poly, angles));
}

// Nelder-Mead on R^d; returns the best vertex and its value.
std::pair<std::vector<double>, double> nelder_mead(const DirichletPolynomial& poly, std::vector<double> start,
                                                   double step, double value_tol) {
  const int d = static_cast<int>(start.size());
  std::vector<std::vector<double>> simplex(d + 1, start);
  for (int i = 0; i < d; ++i) simplex[i + 1][i] += step;
  std::vector<double> f(d + 1);
  for (int i = 0; i <= d; ++i) f[i] = squared_modulus(poly, simplex[i]);

  std::vector<int> order(d + 1);
  auto point = [&](const std::vector<double>& centroid, const std::vector<double>& x, double t) {
    std::vector<double> out(d);
    for (int i = 0; i < d; ++i) out[i] = centroid[i] + t * (x[i] - centroid[i]);
    return out;
  };

  for (int iter = 0; iter < 20000; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return f[a] < f[b]; });
    const int best = order.front();
    const int worst = order.back();
    const int second_worst = order[d - 1 >= 0 ? d - 1 : 0];

    double diameter = 0.0;
    for (int i = 0; i <= d; ++i) {
      for (int c = 0; c < d; ++c) diameter = std::max(diameter, std::abs(simplex[i][c] - simplex[best][c]));
    }
    const double spread = std::sqrt(f[worst]) - std::sqrt(f[best]);
    if ((spread <= value_tol && diameter <= 1e-9) || diameter <= 1e-15) break;

    std::vector<double> centroid(d, 0.0);
    for (int i = 0; i <= d; ++i) {
      if (i == worst) continue;
      for (int c = 0; c < d; ++c) centroid[c] += simplex[i][c] / d;
    }
    auto reflected = point(centroid, simplex[worst], -1.0);
    const double fr = squared_modulus(poly, reflected);
    if (fr < f[best]) {
      auto expanded = point(centroid, simplex[worst], -2.0);
      const double fe = squared_modulus(poly, expanded);
      if (fe < fr) {
        simplex[worst] = std::move(expanded);
        f[worst] = fe;
      } else {
        simplex[worst] = std::move(reflected);
        f[worst] = fr;
      }
      continue;
    }
    if (fr < f[second_worst]) {
      simplex[worst] = std::move(reflected);
      f[worst] = fr;
      continue;
    }
    const bool outside = fr < f[worst];
    auto contracted = point(centroid, outside ? reflected : simplex[worst], 0.5);
    const double fc = squared_modulus(poly, contracted);
    if (fc < std::min(fr, f[worst])) {
      simplex[worst] = std::move(contracted);
      f[worst] = fc;
      continue;
    }
    for (int i = 0; i <= d; ++i) {
      if (i == best) continue;
      simplex[i] = point(simplex[best], simplex[i], 0.5);
      f[i] = squared_modulus(poly, simplex[i]);
    }
  }
  const auto it = std::min_element(f.begin(), f.end());
  const auto idx = static_cast<std::size_t>(it - f.begin());
  return {simplex[idx], *it};
}

}  // namespace

TorusMinResult min_modulus(const DirichletPolynomial& poly, const TorusMinOptions& opts) {
  const int d = poly.dimension();
  if (d > 3) {
    throw std::invalid_argument("min_modulus supports d <= 3 (grid cost grows as n^d), got d = " +
                                std::to_string(d));
  }
  TorusMinResult result;
  result.refine_tolerance = opts.refine_tol;
  if (d == 0) {
    result.mu = std::abs(poly.coeffs()[0]);
    result.grid_mu = result.mu;
    result.method = MinMethod::ClosedForm;
    return result;
  }
  const int n = opts.grid_n > 0 ? opts.grid_n : (d == 1 ? 1024 : d == 2 ? 512 : 128);
  if (n < 64) throw std::invalid_argument("min_modulus needs grid_n >= 64");
  result.grid_resolution = n;

  const auto& support = poly.support();
  const PowerTable powers = build_powers(support, n);
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(n);

  std::vector<double> values(total);
  auto scan = [&](std::size_t begin, std::size_t end) {
    std::vector<int> g(d);
    for (std::size_t flat = begin; flat < end; ++flat) {
      std::size_t rem = flat;
      for (int i = d - 1; i >= 0; --i) {
        g[i] = static_cast<int>(rem % n);
        rem /= n;
      }
      std::complex<double> acc = 0.0;
      for (std::size_t k = 0; k < support.size(); ++k) {
        const auto& nu = support.exponents_at(k);
        std::complex<double> term = poly.coeffs()[k];
        for (int i = 0; i < d; ++i) {
          if (nu[i] != 0) term *= powers.at(i, g[i], nu[i]);
        }
        acc += term;
      }
      values[flat] = std::norm(acc);
    }
  };
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || total < 4096) {
    scan(0, total);
  } else {
    std::vector<std::thread> workers;
    const std::size_t chunk = (total + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      const std::size_t begin = std::min(total, t * chunk);
      const std::size_t end = std::min(total, begin + chunk);
      workers.emplace_back(scan, begin, end);
    }
    for (auto& w : workers) w.join();
  }

  auto angles_of = [&](std::size_t flat) {
    std::vector<double> a(d);
    for (int i = d - 1; i >= 0; --i) {
      a[i] = -kPi + 2.0 * kPi * static_cast<double>(flat % n) / n;
      flat /= n;
    }
    return a;
  };

  // Grid local minima (periodic neighbours along each axis).
  std::vector<std::size_t> candidates;
  std::size_t stride = 1;
  std::vector<std::size_t> strides(d);
  for (int i = d - 1; i >= 0; --i) {
    strides[i] = stride;
    stride *= static_cast<std::size_t>(n);
  }
  for (std::size_t flat = 0; flat < total; ++flat) {
    bool is_min = true;
    for (int i = 0; i < d && is_min; ++i) {
      const std::size_t gi = (flat / strides[i]) % n;
      const std::size_t up = flat - gi * strides[i] + ((gi + 1) % n) * strides[i];
      const std::size_t down = flat - gi * strides[i] + ((gi + n - 1) % n) * strides[i];
      if (values[up] < values[flat] || values[down] < values[flat]) is_min = false;
    }
    if (is_min) candidates.push_back(flat);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  if (candidates.empty()) {
    candidates.push_back(static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin()));
  }
  if (static_cast<int>(candidates.size()) > std::max(1, opts.starts)) candidates.resize(std::max(1, opts.starts));

  const std::size_t grid_best = candidates.front();
  result.grid_mu = std::sqrt(values[grid_best]);
  result.mu = result.grid_mu;
  result.argmin = angles_of(grid_best);
  result.method = MinMethod::GridRefine;

  const double step = 2.0 * kPi / n;
  for (std::size_t c : candidates) {
    auto [x, f] = nelder_mead(poly, angles_of(c), step, 1e-3 * opts.refine_tol);
    const double mu = std::sqrt(f);
    if (mu < result.mu) {
      result.mu = mu;
      result.argmin = x;
    }
  }
  for (auto& a : result.argmin) a = wrap_angle(a);
  return result;
}

double min_modulus_three_term(double c1, double c2, double c3) {
  if (!(c1 > 0.0) || !(c3 > 0.0)) {
    throw std::invalid_argument("min_modulus_three_term needs c1 > 0 and c3 > 0");
  }
  // With w = e^{i t}, |c1 + c2 w + c3 w^2|^2 = 4 c1 c3 u^2 + 2 (c1 + c3) c2 u + c2^2 + (c3 - c1)^2
  // where u = cos t; the vertex lies in [-1, 1] exactly in the second regime.
  if (std::abs(c2) * (c1 + c3) >= 4.0 * c1 * c3) return std::abs(c1 + c3 - std::abs(c2));
  return std::abs(c1 - c3) * std::sqrt(1.0 - c2 * c2 / (4.0 * c1 * c3));
}

bool zero_free_check(const DirichletPolynomial& poly) {
  const auto c1 = poly.coeff(1);
  if (c1.imag() != 0.0) throw std::invalid_argument("zero_free_check needs a real coefficient c_1");
  double rest = 0.0;
  const auto& elements = poly.support().elements();
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k] != 1) rest += std::abs(poly.coeffs()[k]);
  }
  return rest < c1.real();
}

}  // namespace dilbasis
