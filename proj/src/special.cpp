#include "eis/special.hpp"

#include <cmath>
#include <vector>

#include "eis/errors.hpp"

namespace eis::numerics {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogPi = 1.1447298858494001741;
constexpr double kLog2Pi = 1.8378770664093454836;

// Lanczos g = 7, n = 9 (Godfrey coefficients).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// B_{2k} for k = 1..22 as doubles.
constexpr double kBernoulli2k[22] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
    1520097643918070802691.0 / 1806.0,
    -27833269579301024235023.0 / 690.0,
};

double factorial(int n) {
    double v = 1;
    for (int i = 2; i <= n; ++i) v *= i;
    return v;
}

// log sin(pi z), stable for large |Im z|: for Im z >= 0,
// sin(pi z) = e^{-i pi z} (e^{2 pi i z} - 1) / (2i) and |e^{2 pi i z}| decays.
LogComplex log_sin_pi(Complex z) {
    if (z.imag() < 0) return log_sin_pi(std::conj(z)).conj();
    Complex q = std::exp(Complex(0, 2 * kPi) * z);  // |q| = e^{-2 pi Im z} <= 1
    Complex w = q - 1.0;
    if (w == Complex(0, 0)) throw PoleError("log_sin_pi: sin(pi z) = 0 at integer z");
    double lm = kPi * z.imag() + std::log(std::abs(w)) - std::log(2.0);
    double ph = -kPi * z.real() + std::arg(w) - kPi / 2;
    return LogComplex(lm, ph);
}

// Principal-branch log Gamma as a plain complex number, valid for
// Re z >= 0.5.  Magnitudes of log Gamma itself stay modest (|.| <~ 1e4 on the
// heights this library serves), so a plain complex return is safe here; the
// LogComplex wrapper happens in log_gamma().
Complex log_gamma_main(Complex z) {
    if (std::fabs(z.imag()) < 20.0) {
        // Lanczos. Gamma(z) = sqrt(2 pi) t^{z-1/2} e^{-t} A(z), t = z+g-1/2.
        Complex a = kLanczos[0];
        for (int k = 1; k < 9; ++k) a += kLanczos[k] / (z - 1.0 + double(k));
        Complex t = z + (kLanczosG - 0.5);
        return 0.5 * kLog2Pi + (z - 0.5) * std::log(t) - t + std::log(a);
    }
    // Stirling with Bernoulli corrections; recurse up to Re z >= 10 first.
    // log Gamma(z) = log Gamma(z+m) - sum_{k=0}^{m-1} log(z+k) holds exactly
    // on Re z > 0 (the principal branch is never crossed when |Im z| >= 20).
    Complex shift = 0;
    while (z.real() < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    Complex acc = (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi;
    Complex zpow = z;  // z^{2k-1}
    Complex z2 = z * z;
    for (int k = 1; k <= 8; ++k) {
        acc += kBernoulli2k[k - 1] / (double(2 * k) * double(2 * k - 1) * zpow);
        zpow *= z2;
    }
    return acc - shift;
}

}  // namespace

LogComplex log_gamma(SpectralPoint s) {
    Complex z = s;
    if (z.real() >= 0.5) {
        Complex lg = log_gamma_main(z);
        return LogComplex(lg.real(), lg.imag());
    }
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
    if (z.imag() == 0 && z.real() == std::floor(z.real()) && z.real() <= 0)
        throw PoleError("log_gamma: pole at non-positive integer");
    LogComplex ls = log_sin_pi(z);
    Complex lg1 = log_gamma_main(1.0 - z);
    return LogComplex(kLogPi - ls.log_mag() - lg1.real(), -ls.phase() - lg1.imag());
}

Complex zeta(SpectralPoint sp, double tol) {
    Complex s = sp;
    if (std::abs(s - 1.0) < 1e-12) throw PoleError("zeta: pole at s = 1");
    double at = std::fabs(s.imag());
    if (at > 2000.0) throw BudgetError("zeta: height ceiling |Im s| <= 2000 exceeded");
    if (tol <= 0) throw DomainError("zeta: tol must be positive");

    long N = std::lround(std::max(18.0, 0.45 * at + 18.0));
    for (int attempt = 0; attempt < 7; ++attempt) {
        // Partial sum, midpoint and integral terms.
        Complex acc = 0;
        for (long n = 1; n < N; ++n) acc += std::exp(-s * std::log(double(n)));
        Complex NmS = std::exp(-s * std::log(double(N)));  // N^{-s}
        acc += 0.5 * NmS;
        acc += NmS * double(N) / (s - 1.0);  // N^{1-s}/(s-1)

        // Correction terms T_k = B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1};
        // remainder after K terms is bounded by
        // |T_{K+1}| |(s + 2K + 1)/(sigma + 2K + 1)|.
        Complex rising = s;              // (s)_{2k-1}, starts at k=1 with just s
        Complex Npow = NmS / double(N);  // N^{-s-2k+1} at k=1
        double invN2 = 1.0 / (double(N) * double(N));
        bool certified = false;
        Complex total = acc;
        for (int k = 1; k <= 22; ++k) {
            Complex Tk = kBernoulli2k[k - 1] / factorial(2 * k) * rising * Npow;
            total += Tk;
            // Build T_{k+1} pieces to test the remainder bound.
            Complex rising_next = rising * (s + double(2 * k - 1)) * (s + double(2 * k));
            Complex Npow_next = Npow * invN2;
            if (k < 22) {
                Complex Tnext = kBernoulli2k[k] / factorial(2 * k + 2) * rising_next * Npow_next;
                double bound = std::abs(Tnext) *
                               std::abs((s + double(2 * k + 1)) / (s.real() + double(2 * k + 1)));
                if (bound <= tol) {
                    certified = true;
                    break;
                }
                // Divergent regime for this N: terms stopped shrinking.
                if (std::abs(Tnext) > std::abs(Tk) && k >= 4) break;
            }
            rising = rising_next;
            Npow = Npow_next;
        }
        if (certified) return total;
        N = std::lround(N * 1.6) + 1;
    }
    throw ToleranceError("zeta: could not certify requested tolerance at this height");
}

Complex zeta_tail_powersum(Complex w, long K) {
    if (w.real() <= 1.0) throw DomainError("zeta_tail_powersum: needs Re w > 1");
    if (K < 8) throw DomainError("zeta_tail_powersum: K >= 8 required by the error budget");
    // sum_{k > K} k^{-w} = K^{1-w}/(w-1) - K^{-w}/2 - f'(K)/12 + f'''(K)/720
    //                      - f^(5)(K)/30240,  f = x^{-w}.
    Complex KmW = std::exp(-w * std::log(double(K)));
    double invK = 1.0 / double(K);
    Complex acc = KmW * double(K) / (w - 1.0);
    acc -= 0.5 * KmW;
    Complex d1 = -w * KmW * invK;
    acc -= d1 / 12.0;
    Complex d3 = -w * (w + 1.0) * (w + 2.0) * KmW * invK * invK * invK;
    acc += d3 / 720.0;
    Complex d5 = d3 * (w + 3.0) * (w + 4.0) * invK * invK;
    acc -= d5 / 30240.0;
    return acc;
}

LogComplex xi(SpectralPoint sp) {
    Complex s = sp;
    if (std::abs(s) < 1e-12 || std::abs(s - 1.0) < 1e-12)
        throw PoleError("xi: pole at s in {0, 1}");
    if (s.real() < 0.5) s = 1.0 - s;  // functional equation
    Complex z = zeta(SpectralPoint(s));
    if (z == Complex(0, 0)) return LogComplex::zero();
    LogComplex lz = LogComplex::from_complex(z);
    LogComplex lg = log_gamma(SpectralPoint(s / 2.0));
    LogComplex ppow(-s.real() / 2 * kLogPi, -s.imag() / 2 * kLogPi);  // pi^{-s/2}
    return ppow * lg * lz;
}

ScaledReal xi_on_critical_line(double tau) {
    LogComplex v = xi(SpectralPoint(0.5, tau));
    if (v.is_zero()) return {0.0, 0.0};
    // xi is real on the line: the phase collapses to 0 or pi up to rounding.
    // A phase that fails to collapse means the true value sits below the
    // rounding floor of the factors, i.e. tau is a zero to working precision.
    double c = std::cos(v.phase());
    if (std::fabs(c) < 0.9) return {0.0, v.log_mag()};
    double sgn = c >= 0 ? 1.0 : -1.0;
    return {sgn * std::fabs(c), v.log_mag()};
}

}  // namespace eis::numerics
