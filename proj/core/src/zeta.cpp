#include "dilbasis/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dilbasis {

namespace {

constexpr int kBorweinN = 40;

// d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), built by term ratios.
std::array<double, kBorweinN + 1> borwein_weights() {
  std::array<double, kBorweinN + 1> d{};
  const int n = kBorweinN;
  double term = 1.0 / n;  // i = 0: (n-1)! / n! = 1/n
  double acc = term;
  d[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    // ratio term_i / term_{i-1} = (n+i-1) * 4 * (n-i+1) / ((2i)(2i-1))
    term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
    acc += term;
    d[i] = n * acc;
  }
  return d;
}

}  // namespace

double zeta(double s) {
  if (!(s > 1.0)) {
    throw std::domain_error("zeta: only real arguments s > 1 are supported, got " +
                            std::to_string(s));
  }
  static const auto d = borwein_weights();
  const double dn = d[kBorweinN];
  double acc = 0.0;
  for (int k = kBorweinN - 1; k >= 0; --k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    acc += sign * (d[k] - dn) / std::pow(k + 1.0, s);
  }
  const double eta = -acc / dn;
  // 1 - 2^(1-s), written to keep precision for s close to 1.
  const double factor = -std::expm1((1.0 - s) * std::numbers::ln2);
  return eta / factor;
}

double zeta3() {
  static const double value = zeta(3.0);
  return value;
}

}  // namespace dilbasis
