#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "eis/errors.hpp"
#include "eis/log_complex.hpp"
#include "eis/special.hpp"

using namespace eis;
using numerics::log_gamma;
using numerics::xi;
using numerics::zeta;

namespace {

constexpr double kPi = 3.14159265358979323846;

double u01(std::mt19937_64& g) { return double(g() >> 11) * 0x1.0p-53; }

double log_rel_gap(const LogComplex& a, const LogComplex& b) {
    // |a-b| / |b| through log space, safe for huge/tiny magnitudes
    LogComplex d = a - b;
    if (d.is_zero()) return 0.0;
    return std::exp(d.log_mag() - b.log_mag());
}

}  // namespace

TEST_CASE("log_gamma at classical points") {
    LogComplex g5 = log_gamma(SpectralPoint(5.0, 0.0));
    CHECK(g5.log_mag() == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK(g5.phase() == doctest::Approx(0.0));

    LogComplex gh = log_gamma(SpectralPoint(0.5, 0.0));
    CHECK(gh.log_mag() == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-14));
    CHECK(gh.phase() == doctest::Approx(0.0));

    // |Gamma(1/2 + 50i)| ~ sqrt(2 pi) e^{-25 pi}, within 2%
    LogComplex g50 = log_gamma(SpectralPoint(0.5, 50.0));
    double stirling = 0.5 * std::log(2 * kPi) - 25.0 * kPi;
    CHECK(std::fabs(std::exp(g50.log_mag() - stirling) - 1.0) < 0.02);
}

TEST_CASE("log_gamma Stirling modulus across the strip") {
    // ratio to sqrt(2 pi) |t|^{sigma-1/2} e^{-pi |t| / 2} tends to 1 like 1/|t|
    for (double sigma : {-2.0, 0.3, 3.0}) {
        for (double t : {10.0, 50.0, 500.0}) {
            LogComplex g = log_gamma(SpectralPoint(sigma, t));
            double stirling =
                0.5 * std::log(2 * kPi) + (sigma - 0.5) * std::log(t) - kPi * t / 2;
            CHECK(std::fabs(std::exp(g.log_mag() - stirling) - 1.0) < 2.0 / t);
        }
    }
}

TEST_CASE("log_gamma poles and identities") {
    CHECK_THROWS_AS(log_gamma(SpectralPoint(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(log_gamma(SpectralPoint(-3.0, 0.0)), PoleError);

    // reflection Gamma(s) Gamma(1-s) = pi / sin(pi s), exercised both in the
    // Lanczos band and in the Stirling band
    for (Complex s : {Complex(0.3, 4.0), Complex(0.3, 19.5), Complex(-1.2, 33.0)}) {
        LogComplex lhs = log_gamma(SpectralPoint(s)) * log_gamma(SpectralPoint(1.0 - s));
        LogComplex rhs = LogComplex::from_real(kPi) /
                         LogComplex::from_complex(std::sin(kPi * s));
        CHECK(log_rel_gap(lhs, rhs) < 1e-11);
    }

    // duplication Gamma(s) Gamma(s+1/2) = 2^{1-2s} sqrt(pi) Gamma(2s) crosses
    // the Lanczos/Stirling seam when 2s passes |Im| = 20
    for (Complex s : {Complex(1.1, 9.0), Complex(1.1, 10.5), Complex(2.0, 40.0)}) {
        LogComplex lhs = log_gamma(SpectralPoint(s)) * log_gamma(SpectralPoint(s + 0.5));
        LogComplex rhs = LogComplex::pow_real_base(2.0, 1.0 - 2.0 * s) *
                         LogComplex::from_real(std::sqrt(kPi)) *
                         log_gamma(SpectralPoint(2.0 * s));
        CHECK(log_rel_gap(lhs, rhs) < 1e-11);
    }
}

TEST_CASE("zeta at classical points") {
    CHECK(std::abs(zeta(SpectralPoint(2.0, 0.0)) - Complex(kPi * kPi / 6, 0)) < 1e-13);
    CHECK(std::abs(zeta(SpectralPoint(0.0, 0.0)) - Complex(-0.5, 0)) < 1e-13);
    CHECK(std::abs(zeta(SpectralPoint(-1.0, 0.0)) - Complex(-1.0 / 12, 0)) < 1e-13);
    CHECK(std::abs(zeta(SpectralPoint(3.0, 0.0)) - Complex(1.2020569031595943, 0)) < 1e-13);
}

TEST_CASE("zeta pole and height ceiling") {
    CHECK_THROWS_AS(zeta(SpectralPoint(1.0, 0.0)), PoleError);
    CHECK_THROWS_AS(zeta(SpectralPoint(1.0 + 1e-13, 0.0)), PoleError);
    CHECK_THROWS_AS(zeta(SpectralPoint(0.5, 2500.0)), BudgetError);
    // near-pole but outside the guard: finite, dominated by 1/(s-1)
    Complex near = zeta(SpectralPoint(1.0 + 1e-6, 0.0));
    CHECK(std::fabs(near.real() - 1e6) < 1.0);
}

TEST_CASE("zeta vanishes at the first zero ordinate") {
    // located independently by sign changes of the real-valued xi(1/2 + i tau)
    double lo = 14.0, hi = 14.3;
    double flo = numerics::xi_on_critical_line(lo).value;
    for (int it = 0; it < 60; ++it) {
        double mid = (lo + hi) / 2;
        double fm = numerics::xi_on_critical_line(mid).value;
        if ((flo < 0) == (fm < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    CHECK(std::abs(zeta(SpectralPoint(0.5, (lo + hi) / 2))) < 1e-6);
}

TEST_CASE("zeta_tail_powersum matches zeta minus partial sum") {
    // The expansion stops at the f^(5) correction, so the truncation error is
    // governed by the first omitted Euler-Maclaurin term
    //   |w(w+1)...(w+6)| K^{-Re w - 7} |B_8| / 8!.
    for (Complex w : {Complex(2.0, 0.0), Complex(1.5, 2.0), Complex(3.0, -11.0)}) {
        for (long K : {10L, 57L}) {
            Complex partial = 0;
            for (long k = 1; k <= K; ++k)
                partial += std::pow(Complex(double(k), 0.0), -w);
            Complex want = zeta(SpectralPoint(w)) - partial;
            Complex got = numerics::zeta_tail_powersum(w, K);
            double next_term = 1.0;
            for (int j = 0; j < 7; ++j) next_term *= std::abs(w) + j;
            next_term *= std::pow(double(K), -(w.real() + 7.0)) / 1209600.0;
            CHECK(std::abs(got - want) < 3.0 * next_term + 1e-12);
        }
    }
}

TEST_CASE("xi at classical points and poles") {
    LogComplex x2 = xi(SpectralPoint(2.0, 0.0));
    CHECK(std::abs(x2.to_complex() - Complex(kPi / 6, 0)) < 1e-13);
    CHECK_THROWS_AS(xi(SpectralPoint(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(xi(SpectralPoint(1.0, 0.0)), PoleError);
}

TEST_CASE("xi functional equation and conjugation") {
    LogComplex a = xi(SpectralPoint(0.3, 7.0));
    LogComplex b = xi(SpectralPoint(0.7, -7.0));
    CHECK(std::fabs(a.log_mag() - b.log_mag()) < 1e-10);
    CHECK(std::fabs(a.phase() - b.phase()) < 1e-10);

    LogComplex c = xi(SpectralPoint(0.5, 30.0));
    LogComplex d = xi(SpectralPoint(0.5, -30.0));
    CHECK(std::fabs(c.log_mag() - d.log_mag()) < 1e-12);
    CHECK(std::fabs(c.phase() + d.phase()) < 1e-12);

    std::mt19937_64 rng(7);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        double sigma = -2.0 + 5.0 * u01(rng);
        if (std::fabs(sigma) < 0.05 || std::fabs(sigma - 1.0) < 0.05) sigma += 0.1;
        double t = -100.0 + 200.0 * u01(rng);
        worst = std::max(worst, log_rel_gap(xi(SpectralPoint(sigma, t)),
                                            xi(SpectralPoint(1.0 - sigma, -t))));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("xi_on_critical_line is the real restriction of xi") {
    for (double tau : {2.0, 10.0, 18.7, 44.0}) {
        numerics::ScaledReal r = numerics::xi_on_critical_line(tau);
        LogComplex full = xi(SpectralPoint(0.5, tau));
        CHECK(std::fabs(std::log(std::fabs(r.value)) + r.log_scale - full.log_mag()) < 1e-10);
        // phase of a real value is 0 or pi (mod 2 pi), matching the sign;
        // negative values can land at either end of (-pi, pi]
        double target = r.value > 0 ? 0.0 : kPi;
        CHECK(std::fabs(LogComplex::wrap(full.phase() - target)) < 1e-8);
    }
    // sign change across the first zero
    CHECK(numerics::xi_on_critical_line(14.0).value *
              numerics::xi_on_critical_line(14.3).value < 0);
}
