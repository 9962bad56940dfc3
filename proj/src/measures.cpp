#include "eis/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "eis/errors.hpp"
#include "eis/log_complex.hpp"

namespace eis::measures {

namespace {

using domain::HalfPlanePoint;
using eisenstein::EisensteinEvaluator;
using numerics::integrate_1d;
using numerics::integrate_2d;
using numerics::QuadResult;
using numerics::Weight;

// Raise the region's oscillation hint to the Fourier truncation at its floor,
// where the mode count is largest.
JordanRegion with_mode_hint(const JordanRegion& A, double t, const TruncationPolicy& policy) {
    JordanRegion out = A;
    long n = policy.modes_at(A.y_min(), t);
    out.max_fourier_mode_hint =
        std::max<int>(out.max_fourier_mode_hint, static_cast<int>(std::min<long>(n, 1000000)));
    return out;
}

}  // namespace

MeasureResult quantum_measure(const JordanRegion& A, SpectralPoint s, const QuadratureSpec& spec,
                              const TruncationPolicy& policy) {
    if (A.empty()) return {};
    EisensteinEvaluator ev(s, policy);
    JordanRegion hinted = with_mode_hint(A, s.t, policy);
    double peak2 = 0;
    auto f = [&](double x, double y) {
        double a2 = std::norm(ev.eval_raw(x, y));
        peak2 = std::max(peak2, a2);
        return Complex(a2, 0.0);
    };
    QuadResult q = integrate_2d(f, hinted, Weight::hyperbolic, spec);
    // |E + d|^2 - |E|^2 <= 2|E||d| + |d|^2, integrated against mu(A).
    double d = ev.max_err_seen();
    double trunc = (2.0 * std::sqrt(peak2) * d + d * d) * domain::mu_measure(A);
    return {q.value.real(), q.err_est + trunc};
}

double limit_target(const JordanRegion& A, double sigma_inf, const QuadratureSpec& spec,
                    const TruncationPolicy& policy) {
    if (!(sigma_inf > 0.5))
        throw DomainError("limit_target: sigma_inf must exceed 1/2");
    if (A.empty()) return 0;
    EisensteinEvaluator ev(SpectralPoint(2 * sigma_inf, 0.0), policy);
    JordanRegion hinted = with_mode_hint(A, 0.0, policy);
    auto f = [&](double x, double y) { return Complex(ev.eval_raw(x, y).real(), 0.0); };
    QuadResult q = integrate_2d(f, hinted, Weight::hyperbolic, spec);
    double v = q.value.real();
    if (!(v > 0))
        throw Error("limit_target: integral of E(z, 2 sigma_inf) came out nonpositive");
    return v;
}

MeasureResult nu_measure(const JordanRegion& A, SpectralPoint s, double sigma_inf,
                         const QuadratureSpec& spec, const TruncationPolicy& policy) {
    if (!(sigma_inf > 0.5))
        throw DomainError("nu_measure: sigma_inf must exceed 1/2");
    if (A.empty()) return {};
    EisensteinEvaluator num(s, policy);
    EisensteinEvaluator den(SpectralPoint(2 * sigma_inf, 0.0), policy);
    JordanRegion hinted = with_mode_hint(A, s.t, policy);
    double peak2 = 0, den_min = HUGE_VAL, ratio_peak = 0;
    auto f = [&](double x, double y) {
        double d = den.eval_raw(x, y).real();
        if (!(d > 0))
            throw Error("nu_measure: E(z, 2 sigma_inf) came out nonpositive");
        double a2 = std::norm(num.eval_raw(x, y));
        peak2 = std::max(peak2, a2);
        den_min = std::min(den_min, d);
        double v = a2 / d;
        ratio_peak = std::max(ratio_peak, v);
        return Complex(v, 0.0);
    };
    QuadResult q = integrate_2d(f, hinted, Weight::hyperbolic, spec);
    double dn = num.max_err_seen(), dd = den.max_err_seen();
    double trunc = ((2.0 * std::sqrt(peak2) * dn + dn * dn) / den_min +
                    ratio_peak * dd / den_min) *
                   domain::mu_measure(A);
    return {q.value.real(), q.err_est + trunc};
}

double luo_sarnak_ratio(const JordanRegion& A, double t, double sigma_t,
                        const QuadratureSpec& spec, const TruncationPolicy& policy) {
    if (A.empty())
        throw DomainError("luo_sarnak_ratio: empty region");
    if (!(t > std::exp(1.0)))
        throw DomainError("luo_sarnak_ratio: t must exceed e so log t > 1");
    MeasureResult m = quantum_measure(A, SpectralPoint(sigma_t, t), spec, policy);
    return m.value / (domain::mu_measure(A) * (6.0 / M_PI) * std::log(t));
}

ParsevalReport parseval_check(const WeightFunction& h, SpectralPoint s, long n_max,
                              const QuadratureSpec& spec, const TruncationPolicy& policy) {
    if (n_max < 1)
        throw DomainError("parseval_check: n_max must be positive");
    EisensteinEvaluator ev(s, policy);
    // h dies like exp(-lambda y) upward and exp(-1/(lambda y)) downward; both
    // cutoffs keep the discarded mass below ~exp(-30) of the weight scale.
    const double y_top = std::max(40.0, 33.0 / h.lambda);
    const double y_bot = std::min(0.04, 1.0 / (30.0 * h.lambda));

    // Folded over x -> -x (both factors are even in x).
    QuadratureSpec inner = spec;
    inner.rel_tol = 0.1 * spec.rel_tol;
    inner.abs_tol = 0.1 * spec.abs_tol;
    auto column = [&](double x) {
        double y_lo = std::sqrt(std::max(0.0, 1.0 - x * x));
        auto g = [&](double y) {
            HalfPlanePoint z(x, y);
            double fh = eisenstein::incomplete_eisenstein(z, h, 12);
            return Complex(fh * std::norm(ev.eval_raw(x, y)) / (y * y), 0.0);
        };
        return integrate_1d(g, y_lo, y_top, inner).value;
    };
    double lhs = 2.0 * integrate_1d(column, 0.0, 0.5, spec).value.real();

    auto shelf = [&](double y) {
        double acc = std::norm(ev.coefficient(0, y).to_complex());
        int dead = 0;
        for (long n = 1; n <= n_max; ++n) {
            double an = std::exp(ev.coefficient(n, y).log_mag());
            double c = 2.0 * an * an;
            acc += c;
            if (c < 1e-20 * acc) {
                if (++dead >= 4) break;
            } else {
                dead = 0;
            }
        }
        return Complex(h(y) * acc / (y * y), 0.0);
    };
    double rhs = integrate_1d(shelf, y_bot, y_top, spec).value.real();

    return {lhs, rhs, std::fabs(lhs - rhs)};
}

Complex phi_log_derivative(double t, double sigma, double step) {
    if (!(std::fabs(t) >= 10.0))
        throw DomainError("phi_log_derivative: need |t| >= 10");
    if (!(sigma >= 0.5))
        throw DomainError("phi_log_derivative: need sigma >= 1/2");
    if (!(step > 0.0 && step <= 1e-4))
        throw DomainError("phi_log_derivative: step must lie in (0, 1e-4]");
    LogComplex hi = eisenstein::phi(SpectralPoint(sigma + step, t));
    LogComplex lo = eisenstein::phi(SpectralPoint(sigma - step, t));
    double dm = hi.log_mag() - lo.log_mag();
    double dp = LogComplex::wrap(hi.phase() - lo.phase());
    return Complex(dm, dp) / (2.0 * step);
}

double phi_log_derivative_ratio(double t, double sigma, double step) {
    Complex both = phi_log_derivative(t, sigma, step) + phi_log_derivative(-t, sigma, step);
    return both.real() / (-4.0 * std::log(std::fabs(t)));
}

double SigmaSchedule::sigma_at(double t) const {
    switch (kind) {
        case Kind::constant:
            return sigma0;
        case Kind::critical:
            return 0.5;
        case Kind::approach:
            if (!(t > std::exp(1.0)))
                throw DomainError("sigma schedule: approach needs t > e");
            return 0.5 + c / std::pow(std::log(t), p);
    }
    throw Error("sigma schedule: bad kind");
}

std::string SigmaSchedule::describe() const {
    char buf[80];
    switch (kind) {
        case Kind::constant:
            std::snprintf(buf, sizeof buf, "const:%g", sigma0);
            break;
        case Kind::critical:
            return "critical";
        case Kind::approach:
            std::snprintf(buf, sizeof buf, "approach:%g,%g", c, p);
            break;
        default:
            throw Error("sigma schedule: bad kind");
    }
    return buf;
}

namespace {

double parse_double_all(const std::string& text, const std::string& what) {
    const char* p = text.c_str();
    char* end = nullptr;
    double v = std::strtod(p, &end);
    if (end == p || *end != '\0' || !std::isfinite(v))
        throw ParseError("bad " + what + " '" + text + "'");
    return v;
}

}  // namespace

SigmaSchedule SigmaSchedule::parse(const std::string& text) {
    SigmaSchedule sc;
    if (text == "critical") {
        sc.kind = Kind::critical;
        return sc;
    }
    if (text.rfind("const:", 0) == 0) {
        sc.kind = Kind::constant;
        sc.sigma0 = parse_double_all(text.substr(6), "schedule sigma0");
        if (!(sc.sigma0 > 0.5))
            throw ParseError("const schedule needs sigma0 > 1/2");
        return sc;
    }
    if (text.rfind("approach:", 0) == 0) {
        std::string body = text.substr(9);
        size_t comma = body.find(',');
        if (comma == std::string::npos)
            throw ParseError("approach schedule wants approach:<c>,<p>");
        sc.kind = Kind::approach;
        sc.c = parse_double_all(body.substr(0, comma), "schedule c");
        sc.p = parse_double_all(body.substr(comma + 1), "schedule p");
        if (sc.c < 0)
            throw ParseError("approach schedule needs c >= 0");
        if (!(sc.p > 1))
            throw ParseError("approach schedule needs p > 1 so (sigma_t - 1/2) log t -> 0");
        return sc;
    }
    throw ParseError("bad sigma schedule '" + text +
                     "': want const:<sigma0>, critical, or approach:<c>,<p>");
}

SweepMode parse_sweep_mode(const std::string& text) {
    if (text == "mu") return SweepMode::mu;
    if (text == "nu") return SweepMode::nu;
    if (text == "luo_sarnak") return SweepMode::luo_sarnak;
    if (text == "scattering") return SweepMode::scattering;
    throw ParseError("bad sweep mode '" + text + "': want mu, nu, luo_sarnak, or scattering");
}

std::string to_string(SweepMode mode) {
    switch (mode) {
        case SweepMode::mu: return "mu";
        case SweepMode::nu: return "nu";
        case SweepMode::luo_sarnak: return "luo_sarnak";
        case SweepMode::scattering: return "scattering";
    }
    throw Error("bad sweep mode");
}

}  // namespace eis::measures
