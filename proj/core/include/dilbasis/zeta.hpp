#pragma once

namespace dilbasis {

/// Riemann zeta at real s > 1, from the alternating (eta) series with
/// Borwein's convergence acceleration. Absolute accuracy ~1e-15 relative.
/// Throws std::domain_error for s <= 1.
double zeta(double s);

/// zeta(3), computed once.
double zeta3();

}  // namespace dilbasis
