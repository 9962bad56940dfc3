#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "eis/domain.hpp"
#include "eis/eisenstein.hpp"
#include "eis/errors.hpp"
#include "eis/quadrature.hpp"
#include "eis/special.hpp"
#include "eis/zeros.hpp"

using namespace eis;
using namespace eis::eisenstein;
using domain::HalfPlanePoint;

namespace {

constexpr double kPi = 3.14159265358979323846;

double u01(std::mt19937_64& g) { return double(g() >> 11) * 0x1.0p-53; }

double rel_gap(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("phi algebra") {
    SpectralPoint s(0.7, 9.0);
    LogComplex prod = phi(s) * phi(SpectralPoint(0.3, -9.0));
    CHECK(std::fabs(prod.log_mag()) < 1e-13);
    CHECK(std::fabs(prod.phase()) < 1e-13);

    CHECK(std::fabs(phi(SpectralPoint(0.5, 25.0)).log_mag()) < 1e-14);

    // |phi(s(t))| decays with t off the critical line, staying below 1
    double m20 = phi(SpectralPoint(0.75, 20.0)).log_mag();
    double m100 = phi(SpectralPoint(0.75, 100.0)).log_mag();
    CHECK(m100 < m20);
    CHECK(m20 < 0.0);
}

TEST_CASE("phi pole at half a zeta zero") {
    // The guard compares xi(2s) against a probe 0.01 away and fires ~25
    // e-folds down, i.e. for ordinates correct to ~1e-13.  The bisection
    // refinement stops at 1e-10, which sits just outside that window, so the
    // machine-precision ordinate is pinned here instead of refined.
    double tau1 = 14.134725141734694;
    CHECK_THROWS_AS(phi(SpectralPoint(0.25, tau1 / 2)), PoleError);
}

TEST_CASE("dual-method agreement") {
    CHECK(rel_gap(eisenstein_fourier(HalfPlanePoint(0, 1), SpectralPoint(1.3, 0)),
                  eisenstein_lattice(HalfPlanePoint(0, 1), SpectralPoint(1.3, 0))) < 1e-8);
    CHECK(rel_gap(eisenstein_fourier(HalfPlanePoint(0, 1), SpectralPoint(1.5, 0)),
                  eisenstein_lattice(HalfPlanePoint(0, 1), SpectralPoint(1.5, 0))) < 1e-8);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 5; ++i) {
        HalfPlanePoint z(-0.5 + u01(rng), 0.8 + 1.5 * u01(rng));
        SpectralPoint s(1.1 + 0.9 * u01(rng), -5.0 + 10.0 * u01(rng));
        CHECK(rel_gap(eisenstein_fourier(z, s), eisenstein_lattice(z, s)) < 1e-8);
    }
}

TEST_CASE("constant term dominates at large height") {
    // non-constant Fourier modes decay like e^{-2 pi y}
    SpectralPoint s(1.3, 0);
    double y = 10.0;
    Complex e = eisenstein_fourier(HalfPlanePoint(0.2, y), s);
    Complex c0 = (LogComplex::pow_real_base(y, Complex(s)) +
                  phi(s) * LogComplex::pow_real_base(y, 1.0 - Complex(s)))
                     .to_complex();
    CHECK(std::abs(e - c0) < 1e-13 * std::abs(c0));
}

TEST_CASE("functional equation") {
    SpectralPoint s(0.5, 40.0);
    HalfPlanePoint z(0.1, 1.2);
    Complex lhs = eisenstein_fourier(z, s);
    Complex rhs = (LogComplex::from_complex(eisenstein_fourier(z, SpectralPoint(0.5, -40.0))) *
                   phi(s))
                      .to_complex();
    CHECK(rel_gap(lhs, rhs) < 1e-8);
}

TEST_CASE("gamma invariance and hermitian symmetry") {
    SpectralPoint s(0.8, 13.0);
    HalfPlanePoint z(0.23, 1.31);
    Complex base = eisenstein_fourier(z, s);

    for (domain::MoebiusElement g : {domain::MoebiusElement(1, 3, 0, 1),
                                     domain::MoebiusElement(0, -1, 1, 0),
                                     domain::MoebiusElement(7, 2, 38, 11)}) {
        Complex moved = eisenstein_fourier(domain::apply_moebius(g, z), s);
        CHECK(rel_gap(moved, base) < 1e-9);
    }

    Complex conj_s = eisenstein_fourier(z, SpectralPoint(0.8, -13.0));
    CHECK(std::abs(conj_s - std::conj(base)) < 1e-12 * std::abs(base));
}

TEST_CASE("evaluator caching stays coherent") {
    SpectralPoint s(0.6, 8.0);
    EisensteinEvaluator ev(s);
    double y = 1.37;
    Complex a = ev.eval_raw(0.1, y);
    Complex b = ev.eval_raw(0.4, y);   // same row, different x
    Complex c = ev.eval_raw(0.1, y);   // repeat of the first
    CHECK(a == c);
    CHECK(a != b);
    CHECK(rel_gap(a, eisenstein_fourier(HalfPlanePoint(0.1, y), s)) < 1e-14);
    CHECK(rel_gap(b, eisenstein_fourier(HalfPlanePoint(0.4, y), s)) < 1e-14);

    CHECK(ev.truncation_at(y) >= 1);
    CHECK(ev.err_estimate_at(y) >= 0.0);
    CHECK(ev.max_err_seen() >= ev.err_estimate_at(y));
}

TEST_CASE("coefficients assemble the series") {
    SpectralPoint s(0.7, 5.0);
    EisensteinEvaluator ev(s);
    double x = 0.31, y = 0.9;
    long N = ev.truncation_at(y);
    Complex sum = ev.coefficient(0, y).to_complex();
    for (long n = 1; n <= N; ++n)
        sum += ev.coefficient(n, y).to_complex() * 2.0 * std::cos(2 * kPi * n * x);
    CHECK(std::abs(sum - ev.eval_raw(x, y)) < 1e-10 * std::abs(sum));
    CHECK_THROWS_AS(ev.coefficient(-1, y), DomainError);
}

TEST_CASE("truncation policy honesty and caps") {
    SpectralPoint s(0.5, 23.0);
    HalfPlanePoint z(0.37, 0.9);
    TruncationPolicy coarse{6.0, 200000};
    TruncationPolicy fine{9.0, 200000};
    EisensteinEvaluator ev_coarse(s, coarse);
    Complex a = ev_coarse.eval_raw(z.x, z.y);
    double claimed = ev_coarse.err_estimate_at(z.y);
    Complex b = EisensteinEvaluator(s, fine).eval_raw(z.x, z.y);
    CHECK(std::abs(a - b) <= claimed + 1e-15);

    TruncationPolicy tiny_cap{10.0, 3};
    EisensteinEvaluator capped(s, tiny_cap);
    CHECK_THROWS_AS(capped.eval_raw(0.1, 0.05), BudgetError);
    CHECK_THROWS_AS(TruncationPolicy(-1.0, 100).modes_at(1.0, 10.0), DomainError);
}

TEST_CASE("eisenstein preconditions") {
    CHECK_THROWS_AS(eisenstein_fourier(HalfPlanePoint(0, 1), SpectralPoint(1.0, 0.0)),
                    PoleError);
    CHECK_THROWS_AS(eisenstein_fourier(HalfPlanePoint(0, 1), SpectralPoint(0.0, 0.0)),
                    PoleError);
    CHECK_THROWS_AS(eisenstein_lattice(HalfPlanePoint(0, 1), SpectralPoint(1.02, 0.0)),
                    DomainError);
}

TEST_CASE("lattice shells increase monotonically for real s") {
    HalfPlanePoint z(0, 2);
    SpectralPoint s(2.0, 0.0);
    double prev = 0;
    for (long c : {1L, 2L, 4L, 8L, 16L}) {
        double cur = eisenstein_lattice_shells(z, s, c).real();
        CHECK(cur >= prev);
        prev = cur;
    }
    // shells converge toward the tail-completed value from below
    CHECK(prev <= eisenstein_lattice(z, s).real() + 1e-10);
}

TEST_CASE("residue of E at s = 1 is 3/pi") {
    // Richardson in the pole distance: 2 g(eps) - g(2 eps) kills the O(eps)
    // term of g(eps) = eps E(z, 1 + eps)
    for (HalfPlanePoint z : {HalfPlanePoint(0, 1), HalfPlanePoint(0.3, 1.7)}) {
        auto g = [&](double eps) {
            return eps * eisenstein_fourier(z, SpectralPoint(1.0 + eps, 0.0)).real();
        };
        double extrap = 2 * g(1e-4) - g(2e-4);
        CHECK(std::fabs(extrap - 3 / kPi) < 1e-3);
    }
}

TEST_CASE("weight family and incomplete series") {
    WeightFunction h;
    CHECK(h(1.0) == doctest::Approx(std::exp(-2.0)));
    CHECK(h(2.0) == doctest::Approx(h(0.5)));  // y <-> 1/y symmetry at lambda 1
    CHECK_THROWS_AS(WeightFunction{-1.0}(1.0), DomainError);

    HalfPlanePoint z(0, 1);
    double f12 = incomplete_eisenstein(z, h, 12);
    double f24 = incomplete_eisenstein(z, h, 24);
    CHECK(f12 > 0);
    CHECK(std::fabs(f24 - f12) < 1e-8 * f12);

    // Gamma-invariance under inversion
    HalfPlanePoint w(0.3, 1.4);
    HalfPlanePoint inv = domain::apply_moebius(domain::MoebiusElement(0, -1, 1, 0), w);
    CHECK(std::fabs(incomplete_eisenstein(w, h) - incomplete_eisenstein(inv, h)) < 1e-10);

    // at large height only the identity coset survives; the c = 1 row sums
    // to ~sqrt(pi Y) e^{-Y} (h(Im) <= e^{-1/Im} = e^{-Y - (x + d)^2 / Y})
    double Y = 20.0;
    CHECK(std::fabs(incomplete_eisenstein(HalfPlanePoint(0.4, Y), h) - h(Y)) <
          3.0 * std::sqrt(kPi * Y) * std::exp(-Y));
}

TEST_CASE("mellin transform closed form") {
    WeightFunction h;
    Complex h0 = mellin_transform(h, Complex(0, 0));
    CHECK(h0.real() == doctest::Approx(0.2277877455).epsilon(1e-9));

    // H(s) = H(-s)
    for (Complex s : {Complex(0.3, 0.0), Complex(0.7, 2.0)}) {
        CHECK(std::abs(mellin_transform(h, s) - mellin_transform(h, -s)) < 1e-12);
    }

    // quadrature cross-check of the K-Bessel closed form, lambda = 2
    WeightFunction h2{2.0};
    Complex s(0.3, 0.0);
    QuadratureSpec spec;
    auto q = numerics::integrate_1d(
        [&](double y) {
            return Complex(h2(y) * std::pow(y, -s.real() - 1.0), 0);
        },
        0.0, std::numeric_limits<double>::infinity(), spec);
    CHECK(std::abs(q.value - mellin_transform(h2, s)) < 1e-9 * std::abs(q.value));
}

TEST_CASE("mellin inversion returns the weight") {
    // h(y) = (1/2 pi i) int_{Re s = 0} H(s) y^s ds, evaluated at y = 1; H on
    // the imaginary axis is 2 K_{it}(2), even and rapidly decaying
    WeightFunction h;
    QuadratureSpec spec;
    spec.rel_tol = 1e-8;
    auto q = numerics::integrate_1d(
        [&](double t) { return mellin_transform(h, Complex(0, t)); }, 0.0, 40.0, spec);
    double recovered = 2.0 * q.value.real() / (2 * kPi);  // even integrand, fold
    CHECK(std::fabs(recovered - h(1.0)) < 1e-6);
}
