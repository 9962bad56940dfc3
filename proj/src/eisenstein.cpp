#include "eis/eisenstein.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "eis/bessel.hpp"
#include "eis/divisor.hpp"
#include "eis/errors.hpp"
#include "eis/special.hpp"

namespace eis::eisenstein {

namespace {

constexpr double kPi = 3.14159265358979323846;

// xi(2s) vanishes only at 2s = 1/2 + i tau_n, i.e. Re s = 1/4; a cheap probe
// against a nearby xi value decides whether a small denominator is a genuine
// scattering pole.
LogComplex xi2s_checked(Complex s) {
    LogComplex den = numerics::xi(SpectralPoint(2.0 * s));
    if (std::abs(s.real() - 0.25) < 1e-6) {
        LogComplex probe = numerics::xi(SpectralPoint(2.0 * s + Complex(0.01, 0)));
        if (den.log_mag() < probe.log_mag() - 25.0)
            throw PoleError("xi(2s) vanishes at s = (" + std::to_string(s.real()) + ", " +
                            std::to_string(s.imag()) + "): scattering pole");
    }
    return den;
}

}  // namespace

long TruncationPolicy::modes_at(double y, double t) const {
    if (!(digits > 0) || n_cap < 1) throw DomainError("TruncationPolicy: digits > 0, n_cap >= 1");
    double raw = (std::fabs(t) + 2.3 * digits + 10.0) / (2 * kPi * y);
    return std::lround(std::ceil(raw));
}

LogComplex phi(SpectralPoint s) {
    Complex sc = s;
    LogComplex den = xi2s_checked(sc);
    LogComplex num = numerics::xi(SpectralPoint(2.0 - 2.0 * sc));
    return num / den;
}

EisensteinEvaluator::EisensteinEvaluator(SpectralPoint s, TruncationPolicy policy)
    : s_(s), policy_(policy) {
    Complex sc = s;
    if (std::abs(sc) < 1e-12 || std::abs(sc - 1.0) < 1e-12)
        throw PoleError("eisenstein: s must avoid {0, 1}");
    LogComplex den = xi2s_checked(sc);
    phi_ = numerics::xi(SpectralPoint(2.0 - 2.0 * sc)) / den;
    two_over_xi2s_ = LogComplex::from_real(2.0) / den;
    nu_ = sc - 0.5;
}

const EisensteinEvaluator::Row& EisensteinEvaluator::row(double y) {
    auto it = cache_.find(y);
    if (it != cache_.end()) return it->second;
    if (!(y > 0)) throw DomainError("eisenstein: y must be positive");
    long n_used = policy_.modes_at(y, s_.t);
    if (n_used > policy_.n_cap)
        throw BudgetError("eisenstein: truncation N = " + std::to_string(n_used) +
                          " exceeds n_cap at y = " + std::to_string(y));
    Row r;
    r.n_used = n_used;
    r.terms.reserve(n_used);
    Complex sc = s_;
    LogComplex pref = two_over_xi2s_ * LogComplex::pow_real_base(y, Complex(0.5, 0));
    Complex expo = Complex(1, 0) - 2.0 * sc;
    for (long n = 1; n <= n_used + 1; ++n) {
        LogComplex term = pref * LogComplex::pow_real_base(double(n), sc - 0.5) *
                          LogComplex::from_complex(numerics::sigma_power(n, expo)) *
                          numerics::bessel_k_scaled(nu_, 2 * kPi * n * y);
        if (n <= n_used)
            r.terms.push_back(term);
        else
            r.first_omitted = 2.0 * std::exp(term.log_mag());
    }
    max_err_seen_ = std::max(max_err_seen_, r.first_omitted);
    return cache_.emplace(y, std::move(r)).first->second;
}

Complex EisensteinEvaluator::eval_raw(double x, double y) {
    const Row& r = row(y);
    Complex sc = s_;
    LogComplex acc = LogComplex::pow_real_base(y, sc) + phi_ * LogComplex::pow_real_base(y, 1.0 - sc);
    for (long n = 1; n <= r.n_used; ++n)
        acc = acc + r.terms[n - 1] * LogComplex::from_real(2 * std::cos(2 * kPi * n * x));
    return acc.to_complex();
}

Complex EisensteinEvaluator::operator()(const domain::HalfPlanePoint& z) {
    auto [zr, g] = domain::reduce_to_fundamental(z);
    (void)g;
    return eval_raw(zr.x, zr.y);
}

LogComplex EisensteinEvaluator::coefficient(long n, double y) {
    if (n < 0) throw DomainError("coefficient: n >= 0 (a_{-n} = a_n)");
    Complex sc = s_;
    if (n == 0)
        return LogComplex::pow_real_base(y, sc) + phi_ * LogComplex::pow_real_base(y, 1.0 - sc);
    const Row& r = row(y);
    if (n <= r.n_used) return r.terms[n - 1];
    LogComplex pref = two_over_xi2s_ * LogComplex::pow_real_base(y, Complex(0.5, 0));
    return pref * LogComplex::pow_real_base(double(n), sc - 0.5) *
           LogComplex::from_complex(numerics::sigma_power(n, Complex(1, 0) - 2.0 * sc)) *
           numerics::bessel_k_scaled(nu_, 2 * kPi * n * y);
}

long EisensteinEvaluator::truncation_at(double y) { return row(y).n_used; }

double EisensteinEvaluator::err_estimate_at(double y) { return row(y).first_omitted; }

Complex eisenstein_fourier(const domain::HalfPlanePoint& z, SpectralPoint s,
                           const TruncationPolicy& policy) {
    EisensteinEvaluator ev(s, policy);
    return ev(z);
}

double WeightFunction::operator()(double y) const {
    if (!(lambda > 0)) throw DomainError("WeightFunction: lambda > 0");
    if (!(y > 0)) return 0.0;
    double u = lambda * y;
    double e = u + 1.0 / u;
    return e > 700.0 ? 0.0 : std::exp(-e);
}

Complex mellin_transform(const WeightFunction& h, Complex s) {
    // H(s) = integral h(y) y^{-s} dy/y = lambda^s 2 K_s(2).
    Complex scale = std::exp(s * std::log(h.lambda));
    return scale * 2.0 * numerics::bessel_k_scaled(s, 2.0).to_complex();
}

double incomplete_eisenstein(const domain::HalfPlanePoint& z, const WeightFunction& h,
                             long c_max) {
    if (c_max < 1) throw DomainError("incomplete_eisenstein: c_max >= 1");
    double x = z.x, y = z.y;
    double acc = h(y);  // coset (0, 1)
    for (long c = 1; c <= c_max; ++c) {
        double cy2 = double(c) * y * double(c) * y;
        long d0 = std::lround(-double(c) * x);
        for (int dir : {+1, -1}) {
            int dead = 0;
            for (long k = (dir > 0 ? 0 : 1); k < 100000; ++k) {
                long d = d0 + dir * k;
                double q = (double(c) * x + double(d)) * (double(c) * x + double(d)) + cy2;
                double hval = h(y / q);
                if (std::gcd(c, std::labs(d)) == 1) acc += hval;
                // Break on the height bound, not on coprimality: runs of
                // non-coprime d (e.g. c = 30, d = 2..6) must not end the scan.
                if (hval < 1e-18 * (1.0 + acc))
                    ++dead;
                else
                    dead = 0;
                if (dead >= 4) break;
            }
        }
    }
    // Shells c > c_max: Im(gamma z) <= 1/(c^2 y), so h there is at most
    // e^{-c^2 y / lambda} (the 1/(lambda u) branch), over a d-window of width
    // ~ 2 sqrt(60 lambda y) that still clears e^{-55}.
    double next = double(c_max + 1) * double(c_max + 1) * y / h.lambda;
    double width = 2.0 * std::sqrt(60.0 * y * h.lambda) + 3.0;
    double bound = 2.0 * width * (next > 700.0 ? 0.0 : std::exp(-next));
    if (bound > 1e-10 * acc)
        throw ToleranceError("incomplete_eisenstein: tail bound not met at c_max = " +
                             std::to_string(c_max));
    return acc;
}

}  // namespace eis::eisenstein
