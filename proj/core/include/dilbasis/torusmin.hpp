#pragma once

// Minimum modulus of a polydisk polynomial over the distinguished boundary T^d.

#include <vector>

#include "dilbasis/dirichlet.hpp"

namespace dilbasis {

enum class MinMethod { ClosedForm, GridRefine };

struct TorusMinOptions {
  /// Grid points per axis; 0 selects 1024 (d = 1), 512 (d = 2) or 128 (d = 3).
  int grid_n = 0;
  /// Stopping tolerance of the local refinement, in units of |p|.
  double refine_tol = 1e-10;
  /// Threads used for the grid scan. Results do not depend on it.
  int jobs = 1;
  /// Number of best grid local minima used as refinement starts.
  int starts = 4;
};

struct TorusMinResult {
  double mu = 0.0;             // min |p| over T^d (an upper bound up to refine_tolerance)
  std::vector<double> argmin;  // angles in [-pi, pi)
  MinMethod method = MinMethod::GridRefine;
  int grid_resolution = 0;
  double refine_tolerance = 0.0;
  double grid_mu = 0.0;  // best value seen on the grid
};

/// Uniform angle grid followed by Nelder-Mead refinement from the best grid
/// local minima. Ties on the grid go to the first index in lexicographic
/// angle order. d = 0 returns |c_1| exactly. Throws std::invalid_argument for
/// d > 3 or grid_n < 64.
TorusMinResult min_modulus(const DirichletPolynomial& poly, const TorusMinOptions& opts = {});

/// min over |w| = 1 of |c1 + c2 w + c3 w^2| for c1, c3 > 0:
///   |c2| (c1 + c3) >= 4 c1 c3  ->  |c1 + c3 - |c2||
///   otherwise                  ->  |c1 - c3| sqrt(1 - c2^2 / (4 c1 c3))
double min_modulus_three_term(double c1, double c2, double c3);

/// True iff sum_{n != 1} |c_n| < c_1, which keeps every zero of p outside the
/// closed polydisk. Requires a real c_1.
bool zero_free_check(const DirichletPolynomial& poly);

}  // namespace dilbasis
