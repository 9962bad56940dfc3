#pragma once

#include <functional>
#include <vector>

#include "eis/domain.hpp"
#include "eis/types.hpp"

namespace eis::numerics {

struct QuadResult {
    Complex value;
    double err_est = 0.0;
};

enum class Weight { hyperbolic, euclidean };

// Gauss-Legendre nodes/weights on [-1, 1], cached per rule size.
const std::vector<std::pair<double, double>>& gauss_legendre_rule(int n);

// Finite interval: adaptive Gauss-Legendre with coarse-vs-halves error
// control.  hi may be +infinity, in which case an exp-sinh substitution is
// used instead; the integrand must then decay exponentially.  Throws
// ToleranceError when the refinement budget runs out before
// err_est <= max(abs_tol, rel_tol * |value|).
QuadResult integrate_1d(const std::function<Complex(double)>& f, double lo, double hi,
                        const QuadratureSpec& spec = {});

// Tensor-panel adaptive quadrature over a union of boxes.  The hyperbolic
// weight multiplies the integrand by 1/y^2.  Panels are pre-split in x so the
// base rule puts at least 6 nodes per period of the region's declared
// maximum Fourier mode, then refined adaptively.
QuadResult integrate_2d(const std::function<Complex(double, double)>& f,
                        const domain::JordanRegion& region, Weight weight,
                        const QuadratureSpec& spec = {});

}  // namespace eis::numerics
