#pragma once

#include <utility>
#include <vector>

#include "eis/types.hpp"

namespace eis::numerics {

// Prime factorization by trial division, memoized across calls (the cache is
// internally synchronized; entries are immutable once inserted).
const std::vector<std::pair<long, int>>& factorize(long n);

// sigma_c(n) = sum of c-th powers of the divisors of n.
Complex sigma_power(long n, Complex c);

// Partial sum sum_{n<=N} sigma_a(n) sigma_b(n) / n^s.
Complex ramanujan_lhs(Complex s, Complex a, Complex b, long N);

// zeta(s) zeta(s-a) zeta(s-b) zeta(s-a-b) / zeta(2s-a-b).
Complex ramanujan_rhs(Complex s, Complex a, Complex b);

}  // namespace eis::numerics
