#pragma once

#include <complex>

namespace eis {

using Complex = std::complex<double>;

// Spectral parameter s = sigma + it of the Eisenstein series.
struct SpectralPoint {
    double sigma = 0;
    double t = 0;

    SpectralPoint() = default;
    SpectralPoint(double sigma_, double t_) : sigma(sigma_), t(t_) {}
    SpectralPoint(Complex s) : sigma(s.real()), t(s.imag()) {}

    operator Complex() const { return {sigma, t}; }
};

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_depth = 40;   // max bisection depth per panel
    int base_rule = 12;   // Gauss-Legendre nodes per panel and axis
};

}  // namespace eis
