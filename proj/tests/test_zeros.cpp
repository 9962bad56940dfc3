#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "eis/eisenstein.hpp"
#include "eis/errors.hpp"
#include "eis/special.hpp"
#include "eis/zeros.hpp"

using namespace eis;
using namespace eis::zeros;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p.string();
}

// |xi(1/2 + i tau)| ratio through the scaled representation
double xi_mag_ratio(double tau_num, double tau_den) {
    numerics::ScaledReal a = numerics::xi_on_critical_line(tau_num);
    numerics::ScaledReal b = numerics::xi_on_critical_line(tau_den);
    if (a.value == 0.0) return 0.0;
    return std::fabs(a.value) / std::fabs(b.value) * std::exp(a.log_scale - b.log_scale);
}

}  // namespace

TEST_CASE("load_zeros parses, sorts nothing, rejects junk") {
    ZeroTable t = load_zeros(write_temp("z_ok.txt", "14.134725\n21.022040\n25.010858\n"));
    REQUIRE(t.size() == 3);
    CHECK(t.taus[0] == doctest::Approx(14.134725));
    CHECK(t.taus[2] == doctest::Approx(25.010858));
    CHECK_FALSE(t.refined[0]);

    ZeroTable empty = load_zeros(write_temp("z_empty.txt", ""));
    CHECK(empty.empty());

    ZeroTable commented =
        load_zeros(write_temp("z_com.txt", "# header\n14.134725\n# mid\n21.022040\n"));
    CHECK(commented.size() == 2);

    CHECK_THROWS_AS(load_zeros("/nonexistent/zeros.txt"), ParseError);
    try {
        load_zeros(write_temp("z_bad.txt", "14.134725\nbanana\n"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    // strictly increasing required
    CHECK_THROWS_AS(load_zeros(write_temp("z_mono.txt", "21.022040\n14.134725\n")), ParseError);
    CHECK_THROWS_AS(load_zeros(write_temp("z_dup.txt", "14.134725\n14.134725\n")), ParseError);
    // all tau > 13
    CHECK_THROWS_AS(load_zeros(write_temp("z_low.txt", "12.5\n14.134725\n")), ParseError);
}

TEST_CASE("shipped table loads") {
    ZeroTable t = load_zeros(EIS_ZEROS_FILE);
    REQUIRE(t.size() == 25);
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t.taus[i] > t.taus[i - 1]);
    CHECK(t.taus[0] == doctest::Approx(14.134725).epsilon(1e-6));
    CHECK(t.taus[24] == doctest::Approx(88.809111).epsilon(1e-6));

    ZeroTable seeds = seed_table();
    REQUIRE(seeds.size() == 25);
    for (std::size_t i = 0; i < 25; ++i)
        CHECK(std::fabs(seeds.taus[i] - t.taus[i]) < 1e-5);
}

TEST_CASE("refine_zero relocates the classical ordinates") {
    double tau1 = refine_zero(14.1);
    CHECK(std::fabs(tau1 - 14.134725141734694) < 1e-8);
    double tau2 = refine_zero(20.9);
    CHECK(std::fabs(tau2 - 21.022039638771555) < 1e-8);

    // idempotent: refining a refined ordinate moves it below the contract
    CHECK(std::fabs(refine_zero(tau1) - tau1) < 1e-12);

    // no zero within +-0.5 of 16
    CHECK_THROWS_AS(refine_zero(16.0), NoSignChangeError);
    CHECK_THROWS_AS(refine_zero(5.0), DomainError);
}

TEST_CASE("refined ordinates kill zeta") {
    for (double seed : {14.1, 21.0, 25.0}) {
        double tau = refine_zero(seed);
        double at = std::abs(numerics::zeta(SpectralPoint(0.5, tau)));
        double off = std::abs(numerics::zeta(SpectralPoint(0.5, tau + 0.1)));
        CHECK(at < 1e-8 * off);
    }
}

TEST_CASE("refine_entries and scattering_poles") {
    ZeroTable t = seed_table();
    CHECK_THROWS_AS(scattering_poles(t, 1), Error);  // unrefined entries refuse
    CHECK(scattering_poles(t, 0).empty());

    refine_entries(t, 3);
    CHECK(t.refined[0]);
    CHECK(t.refined[2]);
    CHECK_FALSE(t.refined[3]);

    auto poles = scattering_poles(t, 3);
    REQUIRE(poles.size() == 3);
    CHECK(poles[0].real() == doctest::Approx(0.25));
    CHECK(poles[0].imag() == doctest::Approx(7.0673625708).epsilon(1e-8));

    // each pole satisfies the defining condition xi(2 rho) = 0, scaled
    for (Complex rho : poles) {
        double tau = 2 * rho.imag();
        CHECK(xi_mag_ratio(tau, tau + 0.2) < 1e-8);
    }

    CHECK_THROWS_AS(scattering_poles(t, 26), DomainError);
    CHECK_THROWS_AS(refine_entries(t, 26), DomainError);
}

TEST_CASE("poles blow up the scattering matrix") {
    ZeroTable t = seed_table();
    refine_entries(t, 1);
    Complex rho = scattering_poles(t, 1)[0];
    double near = eisenstein::phi(SpectralPoint(rho + Complex(1e-6, 0))).log_mag();
    double far = eisenstein::phi(SpectralPoint(rho + Complex(1e-2, 0))).log_mag();
    CHECK(near - far > std::log(1e3));
}
