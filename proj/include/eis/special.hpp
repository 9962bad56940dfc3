#pragma once

#include "eis/log_complex.hpp"
#include "eis/types.hpp"

namespace eis::numerics {

// log Gamma(s).  Lanczos for |Im s| < 20, Stirling with Bernoulli correction
// terms (after upward recursion to Re s >= 10) beyond, reflection for
// Re s < 1/2.  The two branches cross-agree at the seam to ~1e-12.
LogComplex log_gamma(SpectralPoint s);

// Riemann zeta by Euler-Maclaurin with the standard certified remainder
// bound; throws ToleranceError if tol cannot be certified, BudgetError above
// the documented height ceiling |Im s| <= 2000.
Complex zeta(SpectralPoint s, double tol = 1e-13);

// Tail power sum: sum_{k > K} k^{-w}, Re w > 1, by Euler-Maclaurin directly
// on the tail (no call into zeta; the lattice oracle depends on this being an
// independent path).
Complex zeta_tail_powersum(Complex w, long K);

// Completed zeta xi(s) = pi^{-s/2} Gamma(s/2) zeta(s), assembled in log
// space.  Arguments with Re s < 1/2 are evaluated through the functional
// equation xi(s) = xi(1-s), which also sidesteps the Gamma-pole / trivial-zero
// collisions at s = -2, -4, ...
LogComplex xi(SpectralPoint s);

// xi(1/2 + i tau) is real; returns its value scaled by e^{-log_scale}
// together with log_scale, as (scaled_value, log_scale).  Used by zero
// refinement, where only signs and locally-relative magnitudes matter.
struct ScaledReal {
    double value;      // xi * e^{-log_scale}
    double log_scale;  // log magnitude reference
};
ScaledReal xi_on_critical_line(double tau);

}  // namespace eis::numerics
