#pragma once

// Sufficient conditions for the dilation system of a profile to be fully
// equivalent to the Fourier sine basis. A finite support set F carries the main
// part m(z) = sum_{j in F} f^(j) j^-z; everything else is controlled through
// the envelope phi_j >= |f^(j)|:
//   main part:  f^(1) > sum_{j in F \ {1}} |f^(j)|
//   tail:       mu - phi + sum_{j in F} |f^(j)| + sum_{j <= k} (phi_j - |f^(j)|) > 0
// where mu is the minimum modulus of the associated polydisk polynomial.

#include <cstdint>
#include <string>
#include <vector>

#include "dilbasis/dirichlet.hpp"
#include "dilbasis/profiles.hpp"
#include "dilbasis/torusmin.hpp"

namespace dilbasis {

enum class Verdict { Equivalent, Inconclusive };

std::string to_string(Verdict v);

struct CriterionOptions {
  TorusMinOptions torus;
  PSineQuadratureOptions psine;
};

struct CriterionReport {
  ProfileSpec profile = ProfileSpec::jump();
  std::vector<std::int64_t> support;
  std::vector<double> support_coeffs;  // f^(j) for j in support, same order
  int k = 0;
  double mu = 0.0;      // conservative: minimizer value minus refine tolerance when a grid was used
  double mu_raw = 0.0;  // value returned by the minimizer
  double phi = 0.0;
  double sum_F_abs = 0.0;
  double correction = 0.0;
  double cond1_margin = 0.0;
  double cond2_value = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  TorusMinResult torus;
};

/// Evaluates both conditions. The coefficient series must reach max(k, max F).
CriterionReport check_multi_term(const CoefficientSeries& series, const SupportSet& support, int k,
                                 const TorusMinOptions& torus = {});

/// Same, computing the coefficients first. Throws std::invalid_argument for
/// k < 0 or a profile without envelope.
CriterionReport check_multi_term(const ProfileSpec& profile, const SupportSet& support, int k,
                                 const CriterionOptions& opts = {});

/// Support {1, p, p^2} with d = 1 and the three-term closed form for mu.
struct TwoTermReport {
  ProfileSpec profile = ProfileSpec::jump();
  std::int64_t prime = 0;
  int k = 0;
  double f1 = 0.0, fp = 0.0, fp2 = 0.0;
  bool coefficient_gate = false;  // f^(p^2) > 0 and f^(p^2) + |f^(p)| < f^(1)
  int regime = 0;            // 1: |f^(p)|(f^(1) + f^(p^2)) >= 4 f^(1) f^(p^2); 2: otherwise; 0: gate failed
  double mu = 0.0;
  double rest_bound = 0.0;   // upper bound for sum_{j not in {1,p,p^2}} |f^(j)|
  double lhs = 0.0;          // left side of the regime inequality
  double rhs = 0.0;          // right side
  double margin = 0.0;       // rhs - lhs
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;        // set when Inconclusive
};

/// Two-term form on {1, p, p^2}. The tail outside {1, p, p^2} is bounded by
///   phi - sum_{j in F} |f^(j)| - sum_{j <= k} (phi_j - |f^(j)|),
/// so both regimes reduce to rest_bound < mu with the regime's mu.
TwoTermReport check_two_term(const ProfileSpec& profile, std::int64_t prime, int k = 0,
                             const CriterionOptions& opts = {});

/// Same from explicit coefficients and a given rest bound (no profile needed).
TwoTermReport two_term_from_coefficients(double f1, double fp, double fp2, double rest_bound);

/// {1, 3, 9} for d = 1 and {1, 3, 5, 9, 25} for d = 2.
SupportSet prime_square_support(int d);

struct PSineMultiTermReport {
  double p = 0.0;
  int d = 0;
  int k = 0;
  double value = 0.0;        // J_d(k, p), the tail-condition value
  double mu = 0.0;
  double main_sum = 0.0;     // sum of |s^(j)| over F \ {1}
  double main_margin = 0.0;  // s^(1) - main_sum
  Verdict verdict = Verdict::Inconclusive;
  CriterionReport criterion;
};

/// p-sine profile on the support of prime_square_support(d); Equivalent iff
/// main_margin > 0 and value > 0.
PSineMultiTermReport psine_multi_term_check(const CoefficientSeries& series, int d, int k,
                                            const TorusMinOptions& torus = {});
PSineMultiTermReport psine_multi_term_check(double p, int d, int k, const CriterionOptions& opts = {});

struct PSineThreeTermReport {
  double p = 0.0;
  int k = 0;
  double s1 = 0.0, s3 = 0.0, s9 = 0.0;
  double cond1_margin = 0.0;  // s1 - |s3| - s9
  double cond2_margin = 0.0;  // |s3| (s1 + s9) - 4 s9 s1
  double lhs = 0.0;           // pi_p/2 - (4 pi_p/pi^2) sum_{j odd <= k} 1/j^2
  double rhs = 0.0;           // s1 + s9 - sum_{3 <= j <= k, j != 9} |s^(j)|
  double margin = 0.0;        // rhs - lhs
  Verdict verdict = Verdict::Inconclusive;
};

/// p-sine profile on {1, 3, 9} when the three-term minimum sits at w = -1.
/// Requires 1 < p < 12/11 and odd k >= 9.
PSineThreeTermReport psine_three_term_check(const CoefficientSeries& series, int k);
PSineThreeTermReport psine_three_term_check(double p, int k, const PSineQuadratureOptions& opts = {});

}  // namespace dilbasis
