#include <cmath>
#include <string>

#include "eis/eisenstein.hpp"
#include "eis/errors.hpp"
#include "eis/special.hpp"

namespace eis::eisenstein {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex cpow_real(double r, Complex e) { return std::exp(e * std::log(r)); }

Complex pochhammer(Complex s, int k) {
    Complex v = 1;
    for (int i = 0; i < k; ++i) v *= s + double(i);
    return v;
}

// integral_tau^inf (1 + w^2)^{-s} dw as the alternating series
// sum_m (-1)^m (s)_m / m! tau^{1-2s-2m} / (2s + 2m - 1); needs tau >= ~1.65.
Complex tail_integral(double tau, Complex s) {
    Complex acc = 0, c = 1;
    double lt = std::log(tau);
    for (int m = 0; m < 80; ++m) {
        Complex term = c * std::exp((1.0 - 2.0 * s - 2.0 * m) * lt) / (2.0 * s + 2.0 * m - 1.0);
        acc += term;
        if (std::abs(term) < 1e-18 * std::abs(acc) && m > 2) return acc;
        c *= -(s + double(m)) / double(m + 1);
    }
    throw ToleranceError("lattice tail integral series did not converge (tau too small)");
}

// sum_{m>=0} F(a0 + m) with F(a) = (a^2 + eta^2)^{-s}, by Euler-Maclaurin:
// integral + F/2 - F'/12 + F'''/720 - F^(5)/30240.
Complex tail_em(double a0, double eta, Complex s) {
    double r = a0 * a0 + eta * eta;
    double lr = std::log(r);
    Complex rs = std::exp(-s * lr);
    Complex rs1 = std::exp((-s - 1.0) * lr);
    Complex rs2 = std::exp((-s - 2.0) * lr);
    Complex rs3 = std::exp((-s - 3.0) * lr);
    Complex rs4 = std::exp((-s - 4.0) * lr);
    Complex rs5 = std::exp((-s - 5.0) * lr);
    double a2 = a0 * a0, a3 = a2 * a0, a5 = a3 * a2;
    Complex f1 = -2.0 * s * a0 * rs1;
    Complex f3 = 12.0 * pochhammer(s, 2) * a0 * rs2 - 8.0 * pochhammer(s, 3) * a3 * rs3;
    Complex f5 = -120.0 * pochhammer(s, 3) * a0 * rs3 + 160.0 * pochhammer(s, 4) * a3 * rs4 -
                 32.0 * pochhammer(s, 5) * a5 * rs5;
    Complex integ = cpow_real(eta, 1.0 - 2.0 * s) * tail_integral(a0 / eta, s);
    return integ + rs / 2.0 - f1 / 12.0 + f3 / 720.0 - f5 / 30240.0;
}

// S(xi, eta, s) = sum_{j in Z} ((xi + j)^2 + eta^2)^{-s}, xi in [0, 1).
Complex s_row(double xi, double eta, Complex s) {
    long jmin = 14 + 2 * long(std::fabs(s.imag()));
    long J = std::max(jmin, long(std::ceil(1.8 * eta - xi)) + 1);
    Complex mid = 0;
    for (long j = -(J - 1); j <= J - 1; ++j) {
        double a = xi + double(j);
        mid += cpow_real(a * a + eta * eta, -s);
    }
    return mid + tail_em(double(J) + xi, eta, s) + tail_em(double(J) - xi, eta, s);
}

Complex shells_sum(double x, double y, Complex s, long c_max) {
    Complex acc = 0;
    for (long c = 1; c <= c_max; ++c) {
        double xc = std::fmod(double(c) * x, 1.0);
        if (xc < 0) xc += 1.0;
        acc += s_row(xc, double(c) * y, s);
    }
    return acc;
}

}  // namespace

Complex eisenstein_lattice(const domain::HalfPlanePoint& z, SpectralPoint s, long c_max) {
    Complex sc = s;
    if (s.sigma < 1.05) throw DomainError("eisenstein_lattice: requires Re s >= 1.05");
    auto [zr, g] = domain::reduce_to_fundamental(z);
    (void)g;
    double x = zr.x, y = zr.y;
    if (c_max <= 0) c_max = std::max(10L, std::lround(std::ceil(8.0 / y)));

    Complex acc = shells_sum(x, y, sc, c_max);
    // Mean part of the neglected shells: the xi-average of S is
    // C(s) eta^{1-2s} with C(s) = sqrt(pi) Gamma(s - 1/2) / Gamma(s).
    Complex cs = std::sqrt(kPi) * (numerics::log_gamma(SpectralPoint(sc - 0.5)) /
                                   numerics::log_gamma(SpectralPoint(sc)))
                                      .to_complex();
    // The power-sum cutoff is raised past c_max with plain scalar powers:
    // the fixed-order tail formula needs K ~ |w| to keep its first omitted
    // term under 1e-13, while c_max only has to kill the oscillatory part.
    Complex w = 2.0 * sc - 1.0;
    long K = std::max(c_max, std::lround(std::ceil(4.0 * (std::abs(w) + 6.0))));
    Complex tail = numerics::zeta_tail_powersum(w, K);
    for (long c = c_max + 1; c <= K; ++c) tail += cpow_real(double(c), -w);
    acc += cs * cpow_real(y, 1.0 - 2.0 * sc) * tail;

    Complex z2s = numerics::zeta(SpectralPoint(2.0 * sc));
    Complex inner = 1.0 + acc / z2s;
    // The dropped oscillatory part of the shell tail sits under the envelope
    // e^{7.5 - 2 pi c_max y} (empirical, with wide margin).
    double wiggle_log = 7.5 - 2 * kPi * double(c_max) * y;
    double denom_log = std::log(std::abs(z2s)) + std::log(std::abs(inner));
    if (wiggle_log - denom_log > std::log(1e-9))
        throw ToleranceError("eisenstein_lattice: oscillatory tail bound exceeds tolerance; "
                             "increase c_max");
    return cpow_real(y, sc) * inner;
}

Complex eisenstein_lattice_shells(const domain::HalfPlanePoint& z, SpectralPoint s, long c_max) {
    Complex sc = s;
    if (s.sigma < 1.05) throw DomainError("eisenstein_lattice: requires Re s >= 1.05");
    if (c_max < 1) throw DomainError("eisenstein_lattice_shells: c_max >= 1");
    auto [zr, g] = domain::reduce_to_fundamental(z);
    (void)g;
    Complex z2s = numerics::zeta(SpectralPoint(2.0 * sc));
    return cpow_real(zr.y, sc) * (1.0 + shells_sum(zr.x, zr.y, sc, c_max) / z2s);
}

}  // namespace eis::eisenstein
