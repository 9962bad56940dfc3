#pragma once

#include "eis/log_complex.hpp"
#include "eis/types.hpp"

namespace eis::numerics {

// K_nu(u) for complex order and u > 0, returned in log space.
//
// The integral (1/2) int_R exp(-u cosh w - nu w) dw is taken on the shifted
// line Im w = -theta, which pulls the e^{-pi |Im nu| / 2} smallness of
// K_{i mu} out as an explicit factor e^{-mu theta} instead of leaving it to
// catastrophic cancellation on the real axis.  Node count grows linearly in
// |Im nu|; orders past `budget` (default 1500) raise BudgetError.
LogComplex bessel_k_scaled(Complex nu, double u, double budget = 1500.0);

// Same contour at 10x the node density and a widened truncation window;
// serves as the independent high-node oracle for tests.
LogComplex bessel_k_reference(Complex nu, double u);

}  // namespace eis::numerics
