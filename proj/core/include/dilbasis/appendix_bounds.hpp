#pragma once

// Lower bounds for the odd p-sine coefficients
//   s_p^(k) = (4/(k pi)) int_0^1 cos((k pi/2) I_p(u)) du,
// from the convexity of I_p: on stretches where the integrand decreases, I_p
// is replaced by its chords; where it increases, by pairs of tangents.

#include <vector>

#include "dilbasis/ptrig.hpp"

namespace dilbasis {

struct Segment {
  double lo = 0.0;
  double hi = 0.0;
};

/// Monotonicity stretches of u -> cos((k pi/2) I_p(u)) on [0, 1].
///
/// k = 4j - 1: j decreasing and j increasing segments, turning points
///   I_p(x~_m) = (4m - 2)/k (m = 1..j), I_p(t~_m) = 4m/k (m = 1..j-1), t~_j = 1.
/// k = 4j - 3: j decreasing and j - 1 increasing segments, x~_j = 1.
/// Segments alternate decreasing / increasing starting at 0.
struct MonotonePartition {
  int k = 0;
  double p = 0.0;
  std::vector<Segment> decreasing;
  std::vector<Segment> increasing;
  std::vector<double> minimum_turning;  // x~_m (cosine minima), excluding the endpoint 1
  std::vector<double> maximum_turning;  // t~_m (cosine maxima), excluding the endpoint 1
};

/// Throws std::invalid_argument unless k is odd and positive, std::domain_error
/// unless p > 1, and NumericalError when the turning points are not distinct
/// doubles below 1 (p too close to 1 for k).
MonotonePartition build_partition(int k, double p);
MonotonePartition build_partition(int k, const PTrigContext& ctx);

/// Chord lower bound for the integral over [y, x] of a decreasing stretch:
///   (2/(k pi)) (x - y) [sin((k pi/2) I(x)) - sin((k pi/2) I(y))] / (I(x) - I(y)).
/// Throws std::invalid_argument unless 0 <= y < x <= 1.
double chord_bound(const PTrigContext& ctx, int k, double y, double x);

/// Intersection ordinate of the tangents to I_p at s and t (t = 1 allowed:
/// the tangent there is vertical and G is the tangent at s evaluated at 1).
double tangent_intersection(const PTrigContext& ctx, double s, double t);

struct TangentPair {
  double j1 = 0.0;
  double j2 = 0.0;
  double g = 0.0;  // tangent_intersection(s, t)
};

/// Two-tangent lower bound for the integral over [s, t] of an increasing
/// stretch; j2 = 0 when t = 1. Throws std::invalid_argument unless 0 <= s < t <= 1.
TangentPair tangent_bounds(const PTrigContext& ctx, int k, double s, double t);

/// Where the interior points of a segment go: equispaced in u, or equispaced
/// in the value I_p(u).
enum class Placement { Uniform, UniformInValue };

/// Partition plus point counts and the placed points, segment endpoints included:
///   decreasing segment 1:  m_minus[0] + 1 points,
///   decreasing segment i:  m_minus[i-1] points (i >= 2),
///   increasing segment i:  m_plus[i-1] points.
struct QuadratureScheme {
  MonotonePartition partition;
  std::vector<int> m_minus;
  std::vector<int> m_plus;
  std::vector<std::vector<double>> decreasing_points;
  std::vector<std::vector<double>> increasing_points;
  Placement placement = Placement::Uniform;
};

/// Throws std::invalid_argument for counts of the wrong length, or below
/// the minimums: m_minus[0] >= 1 (k = 4j - 1) or >= 2 (k = 4j - 3), every other
/// m_minus >= 2, every m_plus >= 2.
QuadratureScheme build_scheme(int k, const PTrigContext& ctx, const std::vector<int>& m_minus,
                              const std::vector<int>& m_plus, Placement placement = Placement::Uniform);

struct ChordTerm {
  double y = 0.0, x = 0.0;
  double value = 0.0;
};

struct TangentTerm {
  double s = 0.0, t = 0.0;
  double j1 = 0.0, j2 = 0.0, g = 0.0;
};

struct BoundResult {
  int k = 0;
  double p = 0.0;
  QuadratureScheme scheme;
  std::vector<ChordTerm> chord_terms;
  std::vector<TangentTerm> tangent_terms;
  bool has_final_tangent = false;  // k = 4j - 1: the last stretch ends at the vertical tangent u = 1
  TangentTerm final_tangent;       // j1 only
  double bracket = 0.0;            // sum of all terms
  double total = 0.0;              // (4/(k pi)) bracket, a lower bound for s_p^(k)
};

BoundResult lower_bound_spk(int k, double p, const std::vector<int>& m_minus, const std::vector<int>& m_plus,
                            Placement placement = Placement::Uniform);

/// k = 3 in the collapsed single-segment form, same point placement.
double lower_bound_s3(double p, int m_minus, int m_plus, Placement placement = Placement::Uniform);

struct IntervalBound {
  int k = 0;
  double lambda = 0.0;
  double at_lambda = 0.0;    // bound at p = lambda
  double scan_min = 0.0;     // minimum of the bound over the p-grid
  double scan_argmin = 0.0;
  int grid = 0;
  int skipped = 0;              // grid points whose partition is not resolvable
  double resolved_p_min = 0.0;  // smallest grid p that was evaluated
};

/// Bound on the grid of `grid` equispaced p in [p_min, lambda]; 1 < p_min < lambda.
/// Grid points where the partition collapses in double precision are skipped
/// and counted; throws NumericalError if all are.
IntervalBound interval_bound(int k, double lambda, const std::vector<int>& m_minus, const std::vector<int>& m_plus,
                             int grid = 200, double p_min = 1.001, int jobs = 1,
                             Placement placement = Placement::Uniform);

}  // namespace dilbasis
