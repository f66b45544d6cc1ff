#include "dilbasis/appendix_bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "dilbasis/errors.hpp"

namespace dilbasis {

namespace {

constexpr double kPi = std::numbers::pi;

// (1 - u^p)^(1/p): reciprocal slope of I_p scaled by 2/pi_p.
double cofactor(double p, double u) {
  if (u >= 1.0) return 0.0;
  return std::exp(std::log1p(-std::pow(u, p)) / p);
}

void check_k(int k) {
  if (k < 1 || k % 2 == 0) throw std::invalid_argument("k must be odd and positive, got " + std::to_string(k));
}

// n + 1 points over [lo, hi], endpoints exact.
std::vector<double> place_points(const PTrigContext& ctx, const Segment& seg, int n, Placement placement) {
  std::vector<double> pts(n + 1);
  pts.front() = seg.lo;
  pts.back() = seg.hi;
  if (placement == Placement::Uniform) {
    for (int r = 1; r < n; ++r) pts[r] = seg.lo + (seg.hi - seg.lo) * r / n;
  } else {
    const double ia = ctx.I(seg.lo);
    const double ib = ctx.I(seg.hi);
    for (int r = 1; r < n; ++r) pts[r] = ctx.I_inverse(ia + (ib - ia) * r / n);
  }
  for (int r = 1; r <= n; ++r) {
    if (!(pts[r] > pts[r - 1])) {
      throw NumericalError("quadrature points are not resolvable in double precision at p = " +
                               std::to_string(ctx.p()),
                           pts[r] - pts[r - 1]);
    }
  }
  return pts;
}

}  // namespace

MonotonePartition build_partition(int k, const PTrigContext& ctx) {
  check_k(k);
  MonotonePartition part;
  part.k = k;
  part.p = ctx.p();
  const bool three = k % 4 == 3;
  const int j = three ? (k + 1) / 4 : (k + 3) / 4;
  const int minima = three ? j : j - 1;
  const int maxima = j - 1;
  for (int m = 1; m <= minima; ++m) part.minimum_turning.push_back(ctx.I_inverse((4.0 * m - 2.0) / k));
  for (int m = 1; m <= maxima; ++m) part.maximum_turning.push_back(ctx.I_inverse(4.0 * m / k));

  // For p close to 1 the turning points crowd against u = 1 and stop being
  // distinct doubles.
  std::vector<double> turning;
  for (int m = 0; m < minima || m < maxima; ++m) {
    if (m < minima) turning.push_back(part.minimum_turning[m]);
    if (m < maxima) turning.push_back(part.maximum_turning[m]);
  }
  double prev = 0.0;
  for (double u : turning) {
    if (!(u > prev && u < 1.0)) {
      throw NumericalError("turning points of k = " + std::to_string(k) + " are not resolvable in double precision at p = " +
                               std::to_string(ctx.p()),
                           1.0 - u);
    }
    prev = u;
  }

  double left = 0.0;
  for (int i = 0; i < j; ++i) {
    const double x = i < minima ? part.minimum_turning[i] : 1.0;
    part.decreasing.push_back({left, x});
    if (x >= 1.0) break;
    const double t = i < maxima ? part.maximum_turning[i] : 1.0;
    part.increasing.push_back({x, t});
    left = t;
  }
  return part;
}

MonotonePartition build_partition(int k, double p) {
  check_k(k);
  const PTrigContext ctx{PExponent(p)};
  return build_partition(k, ctx);
}

double chord_bound(const PTrigContext& ctx, int k, double y, double x) {
  if (!(0.0 <= y && y < x && x <= 1.0)) throw std::invalid_argument("chord_bound needs 0 <= y < x <= 1");
  const double iy = ctx.I(y);
  const double ix = ctx.I(x);
  const double h = 0.5 * k * kPi;
  if (ix - iy < 1e-13) return (x - y) * std::cos(h * iy);
  return 2.0 / (k * kPi) * (x - y) * (std::sin(h * ix) - std::sin(h * iy)) / (ix - iy);
}

double tangent_intersection(const PTrigContext& ctx, double s, double t) {
  if (!(0.0 <= s && s < t && t <= 1.0)) throw std::invalid_argument("tangent_intersection needs 0 <= s < t <= 1");
  const double p = ctx.p();
  const double cs = cofactor(p, s);
  const double ct = cofactor(p, t);
  return (cs * ctx.I(s) - ct * ctx.I(t) + 2.0 / ctx.pi_p() * (t - s)) / (cs - ct);
}

TangentPair tangent_bounds(const PTrigContext& ctx, int k, double s, double t) {
  if (!(0.0 <= s && s < t && t <= 1.0)) throw std::invalid_argument("tangent_bounds needs 0 <= s < t <= 1");
  const double p = ctx.p();
  const double cs = cofactor(p, s);
  const double ct = cofactor(p, t);
  const double h = 0.5 * k * kPi;
  const double scale = ctx.pi_p() / (k * kPi);
  TangentPair out;
  out.g = tangent_intersection(ctx, s, t);
  out.j1 = scale * cs * (std::sin(h * out.g) - std::sin(h * ctx.I(s)));
  out.j2 = t >= 1.0 ? 0.0 : scale * ct * (std::sin(h * ctx.I(t)) - std::sin(h * out.g));
  return out;
}

QuadratureScheme build_scheme(int k, const PTrigContext& ctx, const std::vector<int>& m_minus,
                              const std::vector<int>& m_plus, Placement placement) {
  QuadratureScheme scheme;
  scheme.partition = build_partition(k, ctx);
  const auto& part = scheme.partition;
  if (m_minus.size() != part.decreasing.size() || m_plus.size() != part.increasing.size()) {
    throw std::invalid_argument("k = " + std::to_string(k) + " needs " + std::to_string(part.decreasing.size()) +
                                " decreasing and " + std::to_string(part.increasing.size()) +
                                " increasing counts");
  }
  const int first_min = k % 4 == 3 ? 1 : 2;
  for (std::size_t i = 0; i < m_minus.size(); ++i) {
    const int need = i == 0 ? first_min : 2;
    if (m_minus[i] < need) {
      throw std::invalid_argument("decreasing count " + std::to_string(i + 1) + " must be >= " +
                                  std::to_string(need));
    }
  }
  for (std::size_t i = 0; i < m_plus.size(); ++i) {
    if (m_plus[i] < 2) throw std::invalid_argument("increasing count " + std::to_string(i + 1) + " must be >= 2");
  }
  scheme.m_minus = m_minus;
  scheme.m_plus = m_plus;
  scheme.placement = placement;
  for (std::size_t i = 0; i < m_minus.size(); ++i) {
    const int intervals = i == 0 ? m_minus[0] : m_minus[i] - 1;
    scheme.decreasing_points.push_back(place_points(ctx, part.decreasing[i], intervals, placement));
  }
  for (std::size_t i = 0; i < m_plus.size(); ++i) {
    scheme.increasing_points.push_back(place_points(ctx, part.increasing[i], m_plus[i] - 1, placement));
  }
  return scheme;
}

BoundResult lower_bound_spk(int k, double p, const std::vector<int>& m_minus, const std::vector<int>& m_plus,
                            Placement placement) {
  check_k(k);
  const PTrigContext ctx{PExponent(p)};
  BoundResult r;
  r.k = k;
  r.p = p;
  r.scheme = build_scheme(k, ctx, m_minus, m_plus, placement);

  for (const auto& pts : r.scheme.decreasing_points) {
    for (std::size_t m = 1; m < pts.size(); ++m) {
      r.chord_terms.push_back({pts[m - 1], pts[m], chord_bound(ctx, k, pts[m - 1], pts[m])});
    }
  }
  for (const auto& pts : r.scheme.increasing_points) {
    for (std::size_t m = 1; m < pts.size(); ++m) {
      const double s = pts[m - 1];
      const double t = pts[m];
      const auto pair = tangent_bounds(ctx, k, s, t);
      if (t >= 1.0) {
        r.has_final_tangent = true;
        r.final_tangent = {s, t, pair.j1, 0.0, pair.g};
      } else {
        r.tangent_terms.push_back({s, t, pair.j1, pair.j2, pair.g});
      }
    }
  }

  for (const auto& c : r.chord_terms) r.bracket += c.value;
  for (const auto& t : r.tangent_terms) r.bracket += t.j1 + t.j2;
  if (r.has_final_tangent) r.bracket += r.final_tangent.j1;
  r.total = 4.0 / (k * kPi) * r.bracket;
  return r;
}

double lower_bound_s3(double p, int m_minus, int m_plus, Placement placement) {
  if (m_minus < 1 || m_plus < 2) throw std::invalid_argument("lower_bound_s3 needs m_minus >= 1, m_plus >= 2");
  const PTrigContext ctx{PExponent(p)};
  const double x1 = ctx.I_inverse(2.0 / 3.0);
  const auto x = place_points(ctx, {0.0, x1}, m_minus, placement);
  const auto t = place_points(ctx, {x1, 1.0}, m_plus - 1, placement);

  double acc = 0.0;
  for (int m = 1; m <= m_minus; ++m) acc += chord_bound(ctx, 3, x[m - 1], x[m]);
  // t is indexed from 1 in the closed form: t_1 = x~_1, t_{m+} = 1.
  for (int m = 2; m <= m_plus - 1; ++m) {
    const auto pair = tangent_bounds(ctx, 3, t[m - 2], t[m - 1]);
    acc += pair.j1 + pair.j2;
  }
  acc += tangent_bounds(ctx, 3, t[m_plus - 2], 1.0).j1;
  return 4.0 / (3.0 * kPi) * acc;
}

IntervalBound interval_bound(int k, double lambda, const std::vector<int>& m_minus, const std::vector<int>& m_plus,
                             int grid, double p_min, int jobs, Placement placement) {
  if (!(p_min > 1.0 && p_min < lambda)) throw std::invalid_argument("interval_bound needs 1 < p_min < lambda");
  if (grid < 2) throw std::invalid_argument("interval_bound needs grid >= 2");
  std::vector<double> values(grid);
  std::vector<double> ps(grid);
  for (int i = 0; i < grid; ++i) ps[i] = i == grid - 1 ? lambda : p_min + (lambda - p_min) * i / (grid - 1);

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (int i = next++; i < grid && !failed; i = next++) {
      try {
        values[i] = lower_bound_spk(k, ps[i], m_minus, m_plus, placement).total;
      } catch (const NumericalError&) {
        values[i] = std::numeric_limits<double>::quiet_NaN();
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, grid);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  IntervalBound out;
  out.k = k;
  out.lambda = lambda;
  out.grid = grid;
  out.at_lambda = values.back();
  out.scan_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    if (std::isnan(values[i])) {
      ++out.skipped;
      continue;
    }
    if (out.resolved_p_min == 0.0) out.resolved_p_min = ps[i];
    if (values[i] < out.scan_min) {
      out.scan_min = values[i];
      out.scan_argmin = ps[i];
    }
  }
  if (out.skipped == grid) throw NumericalError("no grid point is resolvable", 0.0);
  return out;
}

}  // namespace dilbasis
