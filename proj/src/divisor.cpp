#include "eis/divisor.hpp"

#include <cmath>
#include <mutex>
#include <unordered_map>

#include "eis/errors.hpp"
#include "eis/special.hpp"

namespace eis::numerics {

namespace {

std::mutex g_factor_mutex;
std::unordered_map<long, std::vector<std::pair<long, int>>> g_factor_cache;

}  // namespace

const std::vector<std::pair<long, int>>& factorize(long n) {
    if (n < 1) throw DomainError("factorize: n must be >= 1");
    std::lock_guard<std::mutex> lock(g_factor_mutex);
    auto it = g_factor_cache.find(n);
    if (it != g_factor_cache.end()) return it->second;
    std::vector<std::pair<long, int>> f;
    long m = n;
    for (long p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            f.emplace_back(p, e);
        }
    }
    if (m > 1) f.emplace_back(m, 1);
    return g_factor_cache.emplace(n, std::move(f)).first->second;
}

Complex sigma_power(long n, Complex c) {
    Complex out = 1;
    for (const auto& [p, e] : factorize(n)) {
        // sum_{j=0}^{e} p^{jc}, summed termwise (robust at c near 0 where the
        // geometric closed form divides by p^c - 1).
        Complex pc = std::exp(c * std::log(double(p)));
        Complex geo = 1, term = 1;
        for (int j = 1; j <= e; ++j) {
            term *= pc;
            geo += term;
        }
        out *= geo;
    }
    return out;
}

Complex ramanujan_lhs(Complex s, Complex a, Complex b, long N) {
    if (N < 1) throw DomainError("ramanujan_lhs: N >= 1 required");
    double bar = 1.0 + std::max(a.real(), 0.0) + std::max(b.real(), 0.0);
    if (s.real() <= bar) throw DomainError("ramanujan_lhs: Re s too small for convergence");
    Complex acc = 0;
    for (long n = 1; n <= N; ++n) {
        Complex t = sigma_power(n, a) * sigma_power(n, b) * std::exp(-s * std::log(double(n)));
        acc += t;
    }
    return acc;
}

Complex ramanujan_rhs(Complex s, Complex a, Complex b) {
    double bar = 1.0 + std::max(a.real(), 0.0) + std::max(b.real(), 0.0);
    if (s.real() <= bar) throw DomainError("ramanujan_rhs: Re s too small for convergence");
    return zeta(s) * zeta(s - a) * zeta(s - b) * zeta(s - a - b) / zeta(2.0 * s - a - b);
}

}  // namespace eis::numerics
