#include "dilbasis/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "dilbasis/errors.hpp"
#include "dilbasis/ptrig.hpp"
#include "dilbasis/zeta.hpp"

namespace dilbasis {

namespace {

constexpr double kPi = std::numbers::pi;

void require_index(int j) {
  if (j < 1) throw std::invalid_argument("coefficient index must be >= 1, got " + std::to_string(j));
}

double jump_smoothed_coeff(double eps, int j) {
  return 4.0 / (kPi * std::pow(static_cast<double>(j), 1.0 + eps));
}

// Value on [0, 1]; the odd 2-periodic extension is applied by the caller.
double base_value(const ProfileSpec& spec, double x) {
  switch (spec.kind()) {
    case ProfileKind::Jump:
      return (x > 0.0 && x < 1.0) ? 1.0 : 0.0;
    case ProfileKind::JumpSmoothed: {
      const double eps = spec.param();
      if (eps == 0.0) return (x > 0.0 && x < 1.0) ? 1.0 : 0.0;
      // Truncated at j <= 2*10^5 + 1; the neglected tail oscillates and is
      // O(j^-(1+eps)/|sin(pi x)|).
      const std::complex<double> rot = std::polar(1.0, 2.0 * kPi * x);
      std::complex<double> z = std::polar(1.0, kPi * x);
      double acc = 0.0;
      for (int j = 1; j <= 200001; j += 2) {
        if ((j - 1) % 128 == 0) z = std::polar(1.0, kPi * x * j);
        acc += jump_smoothed_coeff(eps, j) * z.imag();
        z *= rot;
      }
      return acc;
    }
    case ProfileKind::Trapezoid: {
      const double a = spec.param();
      if (x < a) return x / a;
      if (x < 1.0 - a) return 1.0;
      return (1.0 - x) / a;
    }
    case ProfileKind::Cubic: {
      const double b = spec.param();
      const double y = std::min(x, 1.0 - x);
      if (y >= b) return 1.0;
      const double r = y / b;
      return (r + 1.0) * (r + 1.0) * (1.0 - 0.5 * r) - 1.0;
    }
    case ProfileKind::PSine:
      break;
  }
  throw std::logic_error("base_value: unhandled profile kind");
}

struct Panel {
  double lo;  // distance from anchor
  double hi;
  bool from_half;  // anchored at x = 1/2 (distances measured leftwards)
};

std::vector<Panel> psine_panels(int jmax, int panels_per_wavelength) {
  // Uniform panels of width 2/(jmax * ppw) on [0, 1/2], except the two end
  // panels, which are split geometrically towards the endpoint.
  const int uniform = std::max(8, static_cast<int>(std::ceil(0.25 * jmax * panels_per_wavelength)));
  const double h = 0.5 / uniform;
  constexpr double kRatio = 0.25;
  constexpr int kLevels = 24;
  std::vector<Panel> panels;
  auto graded = [&](bool from_half) {
    double hi = h;
    for (int level = 0; level < kLevels; ++level) {
      panels.push_back({hi * kRatio, hi, from_half});
      hi *= kRatio;
    }
    panels.push_back({0.0, hi, from_half});
  };
  graded(false);
  for (int i = 1; i + 1 < uniform; ++i) panels.push_back({i * h, (i + 1) * h, false});
  graded(true);
  return panels;
}

std::vector<double> psine_coefficients_once(const PTrigContext& ctx, int jmax, int ppw) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const auto& abscissa = Rule::abscissa();
  const auto& weights = Rule::weights();
  const double pi_p = ctx.pi_p();

  std::vector<double> acc(jmax + 1, 0.0);
  const int n_odd = (jmax + 1) / 2;
  std::vector<double> odd_acc(n_odd, 0.0);

  for (const Panel& panel : psine_panels(jmax, ppw)) {
    const double mid = 0.5 * (panel.lo + panel.hi);
    const double half = 0.5 * (panel.hi - panel.lo);
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
      for (int side = -1; side <= 1; side += 2) {
        if (abscissa[i] == 0.0 && side > 0) continue;
        const double dist = mid + side * half * abscissa[i];
        const double x = panel.from_half ? 0.5 - dist : dist;
        const double value = panel.from_half ? ctx.sin_from_peak(pi_p * dist) : ctx.sin(pi_p * x);
        const double wv = weights[i] * half * value;
        // sin(j pi x) for odd j by rotation, resynchronized periodically.
        const std::complex<double> rot = std::polar(1.0, 2.0 * kPi * x);
        std::complex<double> z;
        for (int k = 0; k < n_odd; ++k) {
          if (k % 64 == 0) z = std::polar(1.0, kPi * x * (2 * k + 1));
          odd_acc[k] += wv * z.imag();
          z *= rot;
        }
      }
    }
  }
  for (int k = 0; k < n_odd; ++k) acc[2 * k + 1] = 4.0 * odd_acc[k];
  return acc;
}

}  // namespace

ProfileSpec ProfileSpec::jump() { return ProfileSpec(ProfileKind::Jump, 0.0); }

ProfileSpec ProfileSpec::jump_smoothed(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("jump-smoothed profile needs eps >= 0");
  }
  return ProfileSpec(ProfileKind::JumpSmoothed, eps);
}

ProfileSpec ProfileSpec::trapezoid(double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.5)) {
    throw std::invalid_argument("trapezoid profile needs 0 < alpha <= 1/2");
  }
  return ProfileSpec(ProfileKind::Trapezoid, alpha);
}

ProfileSpec ProfileSpec::cubic(double beta) {
  if (!(beta > 0.0 && beta < 0.5)) {
    throw std::invalid_argument("cubic profile needs 0 < beta < 1/2");
  }
  return ProfileSpec(ProfileKind::Cubic, beta);
}

ProfileSpec ProfileSpec::psine(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("p-sine profile needs p > 1");
  }
  return ProfileSpec(ProfileKind::PSine, p);
}

std::string ProfileSpec::name() const {
  switch (kind_) {
    case ProfileKind::Jump: return "jump";
    case ProfileKind::JumpSmoothed: return "jump-smoothed";
    case ProfileKind::Trapezoid: return "trapezoid";
    case ProfileKind::Cubic: return "cubic";
    case ProfileKind::PSine: return "psine";
  }
  return "unknown";
}

bool ProfileSpec::has_envelope() const noexcept {
  if (kind_ == ProfileKind::Jump) return false;
  if (kind_ == ProfileKind::JumpSmoothed) return param_ > 0.0;
  return true;
}

double eval_profile(const ProfileSpec& spec, double x) {
  if (spec.kind() == ProfileKind::PSine) {
    const PTrigContext ctx{PExponent(spec.param())};
    return ctx.sin(ctx.pi_p() * x);
  }
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r <= 1.0) return base_value(spec, r);
  return -base_value(spec, 2.0 - r);
}

double coeff(const ProfileSpec& spec, int j) {
  require_index(j);
  if (j % 2 == 0) return 0.0;
  const double jd = j;
  switch (spec.kind()) {
    case ProfileKind::Jump:
      return jump_smoothed_coeff(0.0, j);
    case ProfileKind::JumpSmoothed:
      return jump_smoothed_coeff(spec.param(), j);
    case ProfileKind::Trapezoid: {
      const double a = spec.param();
      return 4.0 * std::sin(jd * kPi * a) / (a * jd * jd * kPi * kPi);
    }
    case ProfileKind::Cubic: {
      const double b = spec.param();
      const double t = jd * kPi * b;
      return 12.0 / (jd * jd * jd * kPi * kPi * kPi * b * b) * (std::sin(t) / t - std::cos(t));
    }
    case ProfileKind::PSine:
      return psine_coefficients(spec.param(), j).values[j];
  }
  throw std::logic_error("coeff: unhandled profile kind");
}

double envelope(const ProfileSpec& spec, int j) {
  require_index(j);
  if (!spec.has_envelope()) {
    throw std::invalid_argument("profile '" + spec.name() + "' has no summable coefficient envelope");
  }
  if (j % 2 == 0) return 0.0;
  const double jd = j;
  switch (spec.kind()) {
    case ProfileKind::JumpSmoothed:
      return jump_smoothed_coeff(spec.param(), j);
    case ProfileKind::Trapezoid:
      return 4.0 / (spec.param() * jd * jd * kPi * kPi);
    case ProfileKind::Cubic: {
      const double b = spec.param();
      return 12.0 / (kPi * kPi * kPi * b * b) * (1.0 / (jd * jd * jd * jd * kPi * b) + 1.0 / (jd * jd * jd));
    }
    case ProfileKind::PSine:
      return 4.0 * pi_p(PExponent(spec.param())) / (jd * jd * kPi * kPi);
    case ProfileKind::Jump:
      break;
  }
  throw std::logic_error("envelope: unhandled profile kind");
}

double envelope_sum(const ProfileSpec& spec) {
  if (!spec.has_envelope()) {
    throw std::invalid_argument("profile '" + spec.name() + "' has no summable coefficient envelope");
  }
  switch (spec.kind()) {
    case ProfileKind::JumpSmoothed: {
      const double s = 1.0 + spec.param();
      return 4.0 / kPi * (1.0 - std::pow(2.0, -s)) * zeta(s);
    }
    case ProfileKind::Trapezoid:
      return 0.5 / spec.param();
    case ProfileKind::Cubic: {
      const double b = spec.param();
      return 12.0 / (kPi * kPi * kPi * b * b) * (kPi * kPi * kPi / (96.0 * b) + 0.875 * zeta3());
    }
    case ProfileKind::PSine:
      return 0.5 * pi_p(PExponent(spec.param()));
    case ProfileKind::Jump:
      break;
  }
  throw std::logic_error("envelope_sum: unhandled profile kind");
}

PSineCoefficients psine_coefficients(double p, int jmax, const PSineQuadratureOptions& opts) {
  if (jmax < 1) throw std::invalid_argument("psine_coefficients: jmax must be >= 1");
  if (opts.panels_per_wavelength < 1) {
    throw std::invalid_argument("psine_coefficients: panels_per_wavelength must be >= 1");
  }
  const PTrigContext ctx{PExponent(p)};
  PSineCoefficients out;
  out.p = p;
  if (!opts.estimate_error) {
    out.values = psine_coefficients_once(ctx, jmax, opts.panels_per_wavelength);
    return out;
  }
  const auto coarse = psine_coefficients_once(ctx, jmax, opts.panels_per_wavelength);
  out.values = psine_coefficients_once(ctx, jmax, 2 * opts.panels_per_wavelength);
  for (int j = 1; j <= jmax; ++j) {
    out.error_estimate = std::max(out.error_estimate, std::abs(out.values[j] - coarse[j]));
  }
  if (out.error_estimate > opts.tolerance) {
    throw NumericalError("p-sine coefficient quadrature did not reach tolerance at p = " +
                             std::to_string(p) + " (estimate " + std::to_string(out.error_estimate) + ")",
                         out.error_estimate);
  }
  return out;
}

CoefficientSeries::CoefficientSeries(const ProfileSpec& spec, int jmax, const PSineQuadratureOptions& opts)
    : spec_(spec) {
  if (jmax < 1) throw std::invalid_argument("CoefficientSeries: jmax must be >= 1");
  if (spec.kind() == ProfileKind::PSine) {
    auto table = psine_coefficients(spec.param(), jmax, opts);
    values_ = std::move(table.values);
    error_estimate_ = table.error_estimate;
  } else {
    values_.assign(jmax + 1, 0.0);
    for (int j = 1; j <= jmax; ++j) values_[j] = dilbasis::coeff(spec, j);
  }
  envelope_.assign(jmax + 1, 0.0);
  if (spec.has_envelope()) {
    for (int j = 1; j <= jmax; ++j) envelope_[j] = dilbasis::envelope(spec, j);
    envelope_sum_ = dilbasis::envelope_sum(spec);
  }
}

double CoefficientSeries::coeff(int j) const {
  require_index(j);
  if (j > jmax()) throw std::out_of_range("coefficient index beyond computed range");
  return values_[j];
}

double CoefficientSeries::envelope(int j) const {
  require_index(j);
  if (!spec_.has_envelope()) {
    throw std::invalid_argument("profile '" + spec_.name() + "' has no summable coefficient envelope");
  }
  if (j > jmax()) throw std::out_of_range("envelope index beyond computed range");
  return envelope_[j];
}

double integral_x_over_sin(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::domain_error("integral_x_over_sin needs 0 <= alpha < 1");
  }
  if (alpha == 0.0) return 0.0;
  auto f = [](double x) { return x == 0.0 ? 1.0 / kPi : x / std::sin(kPi * x); };
  double err = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, 0.0, alpha, 15, 1e-12, &err);
  if (err > 1e-12) throw NumericalError("integral_x_over_sin did not converge", err);
  return value;
}

SumIdentity trapezoid_sum_identity(double alpha, int jmax) {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw std::domain_error("trapezoid_sum_identity needs 0 < alpha < 1/2");
  }
  if (jmax < 1) throw std::invalid_argument("trapezoid_sum_identity: jmax must be >= 1");
  const double theta = kPi * alpha;
  const double scale = 4.0 / (alpha * kPi * kPi);
  const int terms = (jmax + 1) / 2;  // odd j = 2k+1, k < terms

  double partial = 0.0;
  for (int k = terms - 1; k >= 0; --k) {
    const double j = 2.0 * k + 1.0;
    partial += std::sin(j * theta) / (j * j);
  }
  // Summation by parts with S_n = sum_{k<=n} sin((2k+1) theta) = sin^2((n+1) theta)/sin(theta):
  // the tail sum_{k>=K} c_k sin((2k+1) theta) equals c_K cos(2 K theta)/(2 sin theta)
  // up to an oscillating remainder bounded by (c_K - c_{K+1})/sin^2(theta).
  const double jk = 2.0 * terms + 1.0;
  const double c_k = 1.0 / (jk * jk);
  const double c_k1 = 1.0 / ((jk + 2.0) * (jk + 2.0));
  const double s = std::sin(theta);
  const double tail = c_k * std::cos(2.0 * terms * theta) / (2.0 * s);

  SumIdentity out;
  out.jmax = 2 * terms - 1;
  out.partial_sum = scale * partial;
  out.tail_estimate = scale * tail;
  out.tail_bound = scale * (c_k - c_k1) / (s * s);
  out.lhs = out.partial_sum + out.tail_estimate;
  out.rhs = 2.0 / alpha * integral_x_over_sin(alpha) +
            2.0 / kPi * std::log((1.0 + std::cos(theta)) / s);
  return out;
}

TruncatedValue jump_smoothed_l2_distance(double eps, int jmax) {
  if (!(eps >= 0.0)) throw std::domain_error("jump_smoothed_l2_distance needs eps >= 0");
  if (jmax < 1) throw std::invalid_argument("jump_smoothed_l2_distance: jmax must be >= 1");
  double acc = 0.0;
  int last = 1;
  for (int j = 1; j <= jmax; j += 2) {
    const double d = 4.0 / (kPi * j) * (1.0 - std::pow(static_cast<double>(j), -eps));
    acc += d * d;
    last = j;
  }
  // Each tail term is below 16/(pi^2 j^2); over odd j > last that sums to at most 16/(pi^2 2 last).
  const double tail_sq = eps == 0.0 ? 0.0 : 16.0 / (kPi * kPi * 2.0 * last);
  TruncatedValue out;
  out.value = std::sqrt(acc);
  out.tail_bound = std::sqrt(acc + tail_sq) - out.value;
  return out;
}

}  // namespace dilbasis
