#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "eis/domain.hpp"
#include "eis/eisenstein.hpp"
#include "eis/errors.hpp"
#include "eis/zeros.hpp"

using namespace eis;
using namespace eis::eisenstein;
using domain::HalfPlanePoint;

namespace {

Complex first_pole() {
    static Complex rho = [] {
        zeros::ZeroTable t = zeros::seed_table();
        zeros::refine_entries(t, 1);
        return zeros::scattering_poles(t, 1)[0];
    }();
    return rho;
}

}  // namespace

TEST_CASE("residue of phi is nonzero and radius-stable") {
    Complex rho = first_pole();
    Complex r1 = residue_of_phi(rho, 1e-3);
    Complex r2 = residue_of_phi(rho, 5e-4);
    CHECK(std::abs(r1) > 1e-6);
    CHECK(std::abs(r1 - r2) < 1e-6 * std::abs(r1));
}

TEST_CASE("residue ratio is independent of the contour radius") {
    Complex rho = first_pole();
    HalfPlanePoint z(0, 1);
    Complex u1 = residue_at_pole(z, rho, 1e-3) / residue_of_phi(rho, 1e-3);
    Complex u2 = residue_at_pole(z, rho, 5e-4) / residue_of_phi(rho, 5e-4);
    CHECK(std::abs(u1 - u2) < 1e-6 * std::abs(u1));
}

TEST_CASE("normalized residue equals the reflected Eisenstein value") {
    Complex rho = first_pole();
    for (HalfPlanePoint z : {HalfPlanePoint(0, 1), HalfPlanePoint(0.3, 1.5)}) {
        Complex slow = scattering_state_contour(z, rho);
        Complex fast = scattering_state(z, rho);
        Complex direct = eisenstein_fourier(z, SpectralPoint(1.0 - rho));
        CHECK(std::abs(slow - fast) < 1e-6 * std::abs(fast));
        CHECK(fast == direct);  // fast path is literally E(z, 1 - rho)
    }
}

TEST_CASE("contour around a regular point vanishes") {
    Complex r = residue_at_pole(HalfPlanePoint(0.1, 1.3), Complex(0.3, 5.0), 1e-3);
    CHECK(std::abs(r) < 1e-10);
}

TEST_CASE("pole-location validation") {
    Complex rho = first_pole();
    // centers near the pole line must match a refined zero to 1e-8
    CHECK_THROWS_AS(residue_at_pole(HalfPlanePoint(0, 1), rho + Complex(0, 1e-4), 1e-3),
                    PoleError);
    CHECK_THROWS_AS(residue_at_pole(HalfPlanePoint(0, 1), rho, 0.2), DomainError);
    CHECK_THROWS_AS(residue_at_pole(HalfPlanePoint(0, 1), rho, 1e-3, 16), DomainError);
}

TEST_CASE("node doubling has converged at the default settings") {
    Complex rho = first_pole();
    HalfPlanePoint z(0.2, 1.1);
    Complex a = residue_at_pole(z, rho, 1e-3, 64);
    Complex b = residue_at_pole(z, rho, 1e-3, 128);
    CHECK(std::abs(a - b) < 1e-9 * std::abs(b));
}

TEST_CASE("scattering state grows like the reflected exponent") {
    // u_rho = E(., 1 - rho) and phi(1 - rho) = xi(2 rho)/xi(2 - 2 rho) vanishes
    // at a pole (2 rho is the zeta zero), so the constant term is y^{1-rho}
    // alone and the whole gap comes from the K-Bessel modes, ~e^{-2 pi Y}
    // amplified by 1/|xi(2 - 2 rho)|.
    Complex rho = first_pole();
    auto gap_at = [&](double Y) {
        double ratio = std::abs(scattering_state(HalfPlanePoint(0.13, Y), rho)) /
                       std::pow(Y, 1.0 - rho.real());
        return std::fabs(ratio - 1.0);
    };
    CHECK(gap_at(3.0) < 1e-2);
    CHECK(gap_at(10.0) < 1e-9);
    CHECK(gap_at(40.0) < 1e-9);
}
