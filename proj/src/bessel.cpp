#include "eis/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "eis/errors.hpp"

namespace eis::numerics {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCancelBudget = 8.0;  // tolerated log-cancellation on the contour
constexpr double kLogEps = 46.0;       // target -log truncation/discretization error

// Truncation limit: drop u*ct*cosh(X) -+ alpha*X below the x=0 peak by
// target_drop.  sgn = +1 solves u*ct*cosh X - a X = T (the slower-decaying
// side when the e^{-alpha x} factor grows), sgn = -1 the other.
double xlim(double uct, double alpha, double target, double sgn) {
    double X = std::acosh(target / uct + 1.0) + 0.5;
    for (int it = 0; it < 60; ++it) {
        double g = uct * std::cosh(X) - sgn * alpha * X - target;
        double gp = uct * std::sinh(X) - sgn * alpha;
        if (gp <= 0) {
            X += 0.5;
            continue;
        }
        double Xn = X - g / gp;
        if (Xn <= 0.25) return 0.5;
        if (std::fabs(Xn - X) < 1e-10) return Xn;
        X = Xn;
    }
    return X;
}

LogComplex contour_core(Complex nu, double u, double lam, double h_scale) {
    double al = nu.real();
    double mu = nu.imag();

    // Contour depth.  th_osc caps the cancellation deficit at e^{c}; th_sad
    // is the saddle depth arcsin(mu/u), binding when u > mu (there the true
    // value ~ e^{-sqrt(u^2-mu^2) - mu asin(mu/u)} sits far below e^{-mu pi/2},
    // so rotating to pi/2 would reintroduce the cancellation).
    double theta = 0.0;
    if (mu > 0) {
        double th_osc = kPi / 2 - kCancelBudget / mu;
        double th_sad = std::asin(std::min(1.0, mu / u));
        theta = std::max(0.0, std::min(th_osc, th_sad));
    }
    double ct = std::cos(theta);

    // Step size: upward strip (width ~1, growth e^{mu d}), downward strip
    // (width pi/2 - theta before the integrand loses decay), and saddle
    // curvature u*ct.
    double h = 2 * kPi / (lam + mu);
    double ddn = kPi / 2 - theta;
    if (lam - mu * ddn > 1.0) h = std::min(h, 2 * kPi * ddn / (lam - mu * ddn));
    if (u * ct > 1e-12) h = std::min(h, kPi * std::sqrt(2.0 / (lam * u * ct)));
    h *= h_scale;

    double target = lam + 5.0 + u * ct;
    double Xp = xlim(u * ct, al, target, -1.0);  // x > 0: e^{-al x} helps decay
    double Xm = xlim(u * ct, al, target, +1.0);  // x < 0: e^{-al x} fights it
    long Np = long(std::ceil(Xp / h));
    long Nm = long(std::ceil(Xm / h));

    // Factor out the max exponent before summing (two passes), then a
    // Neumaier-compensated sum: the deficit e^{c} amplifies rounding.
    double R = -u * ct;
    for (long k = -Nm; k <= Np; ++k) {
        double x = double(k) * h;
        double e = -u * ct * std::cosh(x) - al * x;
        R = std::max(R, e);
    }
    double sr = 0, cr = 0;  // sum, compensation (real)
    double si = 0, ci = 0;  // sum, compensation (imag)
    for (long k = -Nm; k <= Np; ++k) {
        double x = double(k) * h;
        Complex E = -u * std::cosh(Complex(x, -theta)) - nu * x;
        double m = std::exp(E.real() - R);
        double tr = m * std::cos(E.imag());
        double ti = m * std::sin(E.imag());
        double t = sr + tr;
        cr += (std::fabs(sr) >= std::fabs(tr)) ? (sr - t) + tr : (tr - t) + sr;
        sr = t;
        t = si + ti;
        ci += (std::fabs(si) >= std::fabs(ti)) ? (si - t) + ti : (ti - t) + si;
        si = t;
    }
    Complex total(sr + cr, si + ci);
    total *= h / 2;
    if (total == Complex(0, 0)) return LogComplex::zero();
    double log_mag = R + std::log(std::abs(total)) - mu * theta;
    double phase = al * theta + std::arg(total);
    return LogComplex(log_mag, phase);
}

}  // namespace

LogComplex bessel_k_scaled(Complex nu, double u, double budget) {
    if (!(u > 0)) throw DomainError("bessel_k_scaled: argument u must be positive");
    // Reduce Re before Im: negation can flip the sign of Im nu, so doing it
    // second would hand contour_core an order in the lower half plane.
    if (nu.real() < 0) nu = -nu;  // K_{-nu} = K_nu
    if (nu.imag() < 0) return bessel_k_scaled(std::conj(nu), u, budget).conj();
    if (nu.imag() > budget) throw BudgetError("bessel_k_scaled: |Im nu| oscillation budget exceeded");
    return contour_core(nu, u, kLogEps, 1.0);
}

LogComplex bessel_k_reference(Complex nu, double u) {
    if (!(u > 0)) throw DomainError("bessel_k_reference: argument u must be positive");
    if (nu.real() < 0) nu = -nu;
    if (nu.imag() < 0) return bessel_k_reference(std::conj(nu), u).conj();
    return contour_core(nu, u, kLogEps + 8.0, 0.1);
}

}  // namespace eis::numerics
