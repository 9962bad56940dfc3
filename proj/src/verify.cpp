#include "eis/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "eis/bessel.hpp"
#include "eis/divisor.hpp"
#include "eis/domain.hpp"
#include "eis/eisenstein.hpp"
#include "eis/errors.hpp"
#include "eis/log_complex.hpp"
#include "eis/measures.hpp"
#include "eis/quadrature.hpp"
#include "eis/special.hpp"
#include "eis/zeros.hpp"

namespace eis::verify {

namespace {

using domain::HalfPlanePoint;
using eisenstein::EisensteinEvaluator;

// Portable uniform doubles; std::uniform_real_distribution is
// implementation-defined and would break cross-build determinism.
double u01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }
double uniform(std::mt19937_64& g, double a, double b) { return a + (b - a) * u01(g); }

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

CheckResult finish(const std::string& name, double residual, double tol, const Stopwatch& w,
                   const std::string& detail) {
    CheckResult r;
    r.name = name;
    r.residual = residual;
    r.tolerance = tol;
    r.pass = std::isfinite(residual) && residual <= tol;
    r.seconds = w.seconds();
    r.detail = detail;
    return r;
}

CheckResult failed(const std::string& name, const Stopwatch& w, const std::string& why) {
    CheckResult r;
    r.name = name;
    r.pass = false;
    r.residual = std::numeric_limits<double>::quiet_NaN();
    r.seconds = w.seconds();
    r.detail = why;
    return r;
}

const HalfPlanePoint kProbePoints[5] = {
    {0.13, 0.9}, {-0.41, 1.7}, {0.25, 1.05}, {0.02, 3.0}, {0.37, 0.84}};

CheckResult check_functional_equation(bool full) {
    Stopwatch w;
    std::vector<SpectralPoint> ss = {{0.5, 10.0}, {0.5, 40.0}, {0.7, 30.0}};
    if (full) ss.push_back({0.5, 100.0});
    double worst = 0;
    for (const SpectralPoint& s : ss) {
        Complex phv = eisenstein::phi(s).to_complex();
        EisensteinEvaluator at_s(s);
        EisensteinEvaluator at_1ms(SpectralPoint(1.0 - s.sigma, -s.t));
        for (const HalfPlanePoint& z : kProbePoints) {
            Complex lhs = at_s(z);
            Complex rhs = phv * at_1ms(z);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "E(z,s) vs phi(s)E(z,1-s), %zu spectral points x 5 z",
                  ss.size());
    return finish("functional-equation", worst, 1e-8, w, buf);
}

CheckResult check_phi_unitarity(std::mt19937_64& rng) {
    Stopwatch w;
    double worst = 0;
    for (double t : {10.0, 50.0, 100.0}) {
        LogComplex p = eisenstein::phi(SpectralPoint(0.5, t));
        worst = std::max(worst, std::fabs(std::exp(p.log_mag()) - 1.0));
    }
    for (int i = 0; i < 10; ++i) {
        double sigma, t;
        do {
            sigma = uniform(rng, 0.15, 0.85);
        } while (std::fabs(sigma - 0.25) < 0.03 || std::fabs(sigma - 0.75) < 0.03);
        t = uniform(rng, 3.0, 60.0);
        LogComplex prod = eisenstein::phi(SpectralPoint(sigma, t)) *
                          eisenstein::phi(SpectralPoint(1.0 - sigma, -t));
        worst = std::max(worst, std::abs(prod.to_complex() - 1.0));
    }
    return finish("phi-unitarity", worst, 1e-10, w,
                  "|phi| on the critical line and phi(s)phi(1-s) at 10 random s");
}

CheckResult check_xi_symmetry(std::mt19937_64& rng) {
    Stopwatch w;
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        double sigma;
        do {
            sigma = uniform(rng, -1.0, 2.0);
        } while (std::fabs(sigma) < 0.05 || std::fabs(sigma - 1.0) < 0.05);
        double t = uniform(rng, -100.0, 100.0);
        LogComplex a = numerics::xi(SpectralPoint(sigma, t));
        LogComplex b = numerics::xi(SpectralPoint(1.0 - sigma, -t));
        LogComplex d = a - b;
        double rel = d.is_zero() ? 0.0 : std::exp(d.log_mag() - a.log_mag());
        worst = std::max(worst, rel);
    }
    return finish("xi-symmetry", worst, 1e-12, w, "xi(s) vs xi(1-s), 100 random s, |t| <= 100");
}

CheckResult check_ramanujan() {
    Stopwatch w;
    const long N = 10000;
    double worst = 0;
    {
        Complex lhs = numerics::ramanujan_lhs(3.0, -0.4, -0.4, N);
        Complex rhs = numerics::ramanujan_rhs(3.0, -0.4, -0.4);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    {
        Complex s(4.0, 2.0), a(-0.5, 1.0), b = std::conj(a);
        Complex lhs = numerics::ramanujan_lhs(s, a, b, N);
        Complex rhs = numerics::ramanujan_rhs(s, a, b);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    return finish("ramanujan", worst, 1e-3, w,
                  "divisor-sum partial sums (N = 10^4) vs the four-zeta form");
}

CheckResult check_bessel_moment(std::mt19937_64& rng, bool full) {
    Stopwatch w;
    int count = full ? 20 : 6;
    double worst = 0;
    for (int i = 0; i < count; ++i) {
        // Orders with matched |Im|: the closed form decays like
        // e^{-pi max(|Im mu|, |Im nu|)} while the integrand only carries
        // e^{-pi(|Im mu| + |Im nu|)/2}, so a large mismatch would demand more
        // cancellation than doubles hold.  Mismatch <= 4 keeps it near ~5
        // digits lost.
        double imu = uniform(rng, -20.0, 20.0);
        double inu = (imu >= 0 ? 1.0 : -1.0) * (std::fabs(imu) + uniform(rng, -4.0, 4.0));
        inu = std::clamp(inu, -20.0, 20.0);
        Complex mu(uniform(rng, -0.45, 0.45), imu);
        Complex nu(uniform(rng, -0.45, 0.45), inu);
        Complex s(std::fabs(mu.real()) + std::fabs(nu.real()) + uniform(rng, 0.7, 2.0),
                  uniform(rng, -2.5, 2.5));

        LogComplex rhs = LogComplex::pow_real_base(2.0, s - 3.0);
        for (double e1 : {1.0, -1.0})
            for (double e2 : {1.0, -1.0})
                rhs = rhs * numerics::log_gamma((s + e1 * mu + e2 * nu) / 2.0);
        rhs = rhs / numerics::log_gamma(s);
        double scale = (std::fabs(mu.imag()) + std::fabs(nu.imag())) * M_PI / 2.0;
        Complex rhs_scaled = (rhs * LogComplex(scale, 0.0)).to_complex();

        // The scaled integrand is O(1) pointwise while the value can sit a few
        // orders below it (stationary-phase cancellation), so the error target
        // must be anchored to the known closed form, not to machine-relative.
        // 1e-7 keeps the adaptive budget modest for orders near |Im| = 20,
        // where the integrand oscillates ~40 rad per unit of log y.
        QuadratureSpec spec;
        spec.rel_tol = 1e-7;
        spec.abs_tol = 1e-7 * std::abs(rhs_scaled);
        auto f = [&](double u) {
            double y = std::exp(u);
            LogComplex prod = numerics::bessel_k_scaled(mu, y) * numerics::bessel_k_scaled(nu, y) *
                              LogComplex(u * s.real() + scale, u * s.imag());
            return prod.to_complex();
        };
        // Re(s -+ mu -+ nu) >= 0.7 by construction, so the log-y tail below
        // -45 contributes at most ~e^{-31} of the value's scale.
        Complex lhs = numerics::integrate_1d(f, -45.0, 3.9, spec).value;

        worst = std::max(worst, std::abs(lhs - rhs_scaled) / std::abs(rhs_scaled));
    }
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "int y^s K_mu K_nu dy/y vs Gamma product, %d random triples", count);
    return finish("bessel-moment", worst, 1e-6, w, buf);
}

CheckResult check_residue_identity(bool full) {
    Stopwatch w;
    zeros::ZeroTable table = zeros::seed_table();
    long n_zeros = full ? 2 : 1;
    zeros::refine_entries(table, n_zeros);
    std::vector<Complex> poles = zeros::scattering_poles(table, n_zeros);
    std::vector<HalfPlanePoint> zs = {{0.2, 1.3}};
    if (full) {
        zs.push_back({-0.3, 2.1});
        zs.push_back({0.05, 0.9});
    }
    double worst = 0;
    for (Complex rho : poles)
        for (const HalfPlanePoint& z : zs) {
            Complex fast = eisenstein::scattering_state(z, rho);
            Complex slow = eisenstein::scattering_state_contour(z, rho);
            worst = std::max(worst, std::abs(slow - fast) / std::abs(fast));
        }
    char buf[120];
    std::snprintf(buf, sizeof buf, "contour u_rho vs E(z, 1-rho) at %ld zero(s), %zu z",
                  n_zeros, zs.size());
    return finish("residue-identity", worst, 1e-6, w, buf);
}

CheckResult check_parseval() {
    Stopwatch w;
    QuadratureSpec spec;
    spec.rel_tol = 1e-6;
    spec.abs_tol = 1e-9;
    eisenstein::WeightFunction h;
    try {
        measures::ParsevalReport rep =
            measures::parseval_check(h, SpectralPoint(0.6, 10.0), 250, spec);
        char buf[160];
        std::snprintf(buf, sizeof buf, "lhs %.10g vs rhs %.10g (spectral side, n <= 250)",
                      rep.lhs, rep.rhs);
        return finish("parseval-unfolding", rep.gap / std::fabs(rep.rhs), 1e-4, w, buf);
    } catch (const Error& e) {
        return failed("parseval-unfolding", w, e.what());
    }
}

CheckResult check_phi_derivative_trend() {
    Stopwatch w;
    double ratio = measures::phi_log_derivative_ratio(500.0);
    return finish("phi-derivative-trend", std::fabs(ratio - 1.0), 0.3, w,
                  "two-sided phi'/phi at t = 500 against -4 log t");
}

}  // namespace

std::vector<CheckResult> run_suite(bool full, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out;
    out.push_back(check_functional_equation(full));
    out.push_back(check_phi_unitarity(rng));
    out.push_back(check_xi_symmetry(rng));
    out.push_back(check_ramanujan());
    out.push_back(check_bessel_moment(rng, full));
    out.push_back(check_residue_identity(full));
    if (full) {
        out.push_back(check_parseval());
        out.push_back(check_phi_derivative_trend());
    }
    return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return !results.empty();
}

std::string render_text(const std::vector<CheckResult>& results) {
    std::string out;
    char buf[320];
    for (const CheckResult& r : results) {
        std::snprintf(buf, sizeof buf, "%s  %-22s residual %.3e  tol %.0e  (%.2fs)  %s\n",
                      r.pass ? "PASS" : "FAIL", r.name.c_str(), r.residual, r.tolerance,
                      r.seconds, r.detail.c_str());
        out += buf;
    }
    int passed = 0;
    for (const CheckResult& r : results) passed += r.pass ? 1 : 0;
    std::snprintf(buf, sizeof buf, "%d/%zu checks passed\n", passed, results.size());
    out += buf;
    return out;
}

}  // namespace eis::verify
