#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "eis/types.hpp"

namespace eis {

// Complex number stored as (log-magnitude, phase).
//
// Eisenstein assembly multiplies factors whose moduli span e^{+-pi t/2} and
// worse (Gamma, K-Bessel, xi); past t ~ 440 those underflow/overflow IEEE
// doubles outright, so every intermediate product here stays in log space and
// only the final, O(1)-scale sum is exponentiated.  Phase is kept normalized
// to (-pi, pi]; log_mag = -inf encodes exact zero (phase 0 by convention).
class LogComplex {
  public:
    LogComplex() : log_mag_(-inf()), phase_(0) {}
    LogComplex(double log_mag, double phase)
        : log_mag_(log_mag), phase_(std::isinf(log_mag) && log_mag < 0 ? 0 : wrap(phase)) {}

    static LogComplex zero() { return LogComplex(); }
    static LogComplex one() { return LogComplex(0.0, 0.0); }

    static LogComplex from_complex(Complex v) {
        if (v == Complex(0, 0)) return zero();
        return LogComplex(std::log(std::abs(v)), std::arg(v));
    }

    // y^s for real y > 0 without forming y^s in floating point.
    static LogComplex pow_real_base(double y, Complex s) {
        double ly = std::log(y);
        return LogComplex(ly * s.real(), ly * s.imag());
    }

    static LogComplex from_real(double x) {
        if (x == 0) return zero();
        return LogComplex(std::log(std::fabs(x)), x > 0 ? 0.0 : pi());
    }

    Complex to_complex() const {
        if (is_zero()) return {0, 0};
        double m = std::exp(log_mag_);
        return {m * std::cos(phase_), m * std::sin(phase_)};
    }

    double log_mag() const { return log_mag_; }
    double phase() const { return phase_; }
    bool is_zero() const { return std::isinf(log_mag_) && log_mag_ < 0; }

    LogComplex operator*(const LogComplex& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return LogComplex(log_mag_ + o.log_mag_, phase_ + o.phase_);
    }
    LogComplex operator/(const LogComplex& o) const {
        return LogComplex(log_mag_ - o.log_mag_, phase_ - o.phase_);
    }
    LogComplex operator-() const {
        if (is_zero()) return zero();
        return LogComplex(log_mag_, phase_ + pi());
    }
    LogComplex conj() const {
        if (is_zero()) return zero();
        return LogComplex(log_mag_, -phase_);
    }

    // Addition renormalizes against the larger magnitude: with la >= lb,
    // a + b = e^{la + i pa} (1 + e^{(lb-la) + i(pb-pa)}) and the parenthesized
    // factor is an O(1) complex number safe to form directly.
    LogComplex operator+(const LogComplex& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        const LogComplex* big = this;
        const LogComplex* small = &o;
        if (small->log_mag_ > big->log_mag_) std::swap(big, small);
        double dl = small->log_mag_ - big->log_mag_;
        double dp = small->phase_ - big->phase_;
        Complex w = 1.0 + std::exp(Complex(dl, dp));
        if (w == Complex(0, 0)) return zero();
        return LogComplex(big->log_mag_ + std::log(std::abs(w)), big->phase_ + std::arg(w));
    }
    LogComplex operator-(const LogComplex& o) const { return *this + (-o); }

    // log of the value as a plain complex number: log_mag + i*phase.
    Complex log() const { return {log_mag_, phase_}; }

    static double wrap(double p) {
        if (!std::isfinite(p)) return 0;
        p = std::remainder(p, 2 * pi());
        if (p <= -pi()) p += 2 * pi();
        return p;
    }

  private:
    static constexpr double inf() { return std::numeric_limits<double>::infinity(); }
    static constexpr double pi() { return 3.14159265358979323846; }

    double log_mag_;
    double phase_;
};

inline LogComplex operator*(double c, const LogComplex& v) {
    return LogComplex::from_real(c) * v;
}

}  // namespace eis
