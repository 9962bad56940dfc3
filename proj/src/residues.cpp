#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <string>

#include "eis/eisenstein.hpp"
#include "eis/errors.hpp"
#include "eis/zeros.hpp"

namespace eis::eisenstein {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::mutex g_refined_mutex;
std::map<int, double> g_refined_seeds;  // seed index -> refined tau

double refined_seed(int idx, double seed_tau) {
    std::lock_guard<std::mutex> lock(g_refined_mutex);
    auto it = g_refined_seeds.find(idx);
    if (it == g_refined_seeds.end())
        it = g_refined_seeds.emplace(idx, zeros::refine_zero(seed_tau)).first;
    return it->second;
}

// Centers claiming to be scattering poles (within 0.05 of 1/4 + i tau_n/2 for
// a seeded zero, either sign of the imaginary part) must match the refined
// pole to 1e-8; everything else is treated as an analytic-interior center.
void validate_center(Complex rho) {
    zeros::ZeroTable seeds = zeros::seed_table();
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        for (double sign : {+1.0, -1.0}) {
            Complex p(0.25, sign * seeds.taus[i] / 2);
            if (std::abs(rho - p) < 0.05) {
                double tau = refined_seed(int(i), seeds.taus[i]);
                Complex exact(0.25, sign * tau / 2);
                if (std::abs(rho - exact) > 1e-8)
                    throw PoleError("residue contour center is near but not at the scattering "
                                    "pole 1/4 + i*" +
                                    std::to_string(tau) + "/2");
                return;
            }
        }
    }
}

Complex contour(const std::function<Complex(Complex)>& f, Complex rho, double radius,
                int nodes) {
    if (!(radius > 0) || radius > 0.05)
        throw DomainError("residue contour: radius must lie in (0, 0.05]");
    if (nodes < 64) throw DomainError("residue contour: nodes >= 64");
    auto ring = [&](int n) {
        Complex acc = 0;
        for (int j = 0; j < n; ++j) {
            double th = 2 * kPi * j / n;
            Complex e(std::cos(th), std::sin(th));
            acc += f(rho + radius * e) * e;
        }
        return acc * (radius / double(n));
    };
    Complex a = ring(nodes);
    for (int n = 2 * nodes; n <= 8 * nodes; n *= 2) {
        Complex b = ring(n);
        if (std::abs(b - a) <= 1e-12 + 1e-9 * std::abs(b)) return b;
        a = b;
    }
    throw ToleranceError("residue contour: trapezoid doubling did not converge");
}

}  // namespace

Complex residue_at_pole(const domain::HalfPlanePoint& z, Complex rho, double radius, int nodes) {
    validate_center(rho);
    auto [zr, g] = domain::reduce_to_fundamental(z);
    (void)g;
    return contour(
        [&](Complex s) {
            EisensteinEvaluator ev{SpectralPoint(s)};
            return ev.eval_raw(zr.x, zr.y);
        },
        rho, radius, nodes);
}

Complex residue_of_phi(Complex rho, double radius, int nodes) {
    validate_center(rho);
    return contour([&](Complex s) { return phi(SpectralPoint(s)).to_complex(); }, rho, radius,
                   nodes);
}

Complex scattering_state(const domain::HalfPlanePoint& z, Complex rho) {
    validate_center(rho);
    EisensteinEvaluator ev{SpectralPoint(1.0 - rho)};
    return ev(z);
}

Complex scattering_state_contour(const domain::HalfPlanePoint& z, Complex rho, double radius,
                                 int nodes) {
    return residue_at_pole(z, rho, radius, nodes) / residue_of_phi(rho, radius, nodes);
}

}  // namespace eis::eisenstein
