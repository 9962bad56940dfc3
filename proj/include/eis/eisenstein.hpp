#pragma once

#include <map>
#include <vector>

#include "eis/domain.hpp"
#include "eis/log_complex.hpp"
#include "eis/types.hpp"

namespace eis::eisenstein {

struct TruncationPolicy {
    double digits = 10.0;  // target -log10 truncation error
    long n_cap = 200000;   // hard ceiling on Fourier modes

    // Modes kept at height y: N = ceil((|t| + 2.3 digits + 10)/(2 pi y)).
    long modes_at(double y, double t) const;
};

struct FourierCoefficient {
    long n;
    LogComplex value;  // coefficient a_n(y, s) of e^{2 pi i n x}; a_{-n} = a_n
};

// Scattering matrix phi(s) = xi(2-2s)/xi(2s).  Throws PoleError when 2s sits
// on a zero of xi (s = half a zeta zero), reporting the location.
LogComplex phi(SpectralPoint s);

// Evaluates E(z, s) through the Fourier expansion
//   y^s + phi(s) y^{1-s} + (2 sqrt(y)/xi(2s)) sum_{n>=1} n^{s-1/2}
//     sigma_{1-2s}(n) K_{s-1/2}(2 pi n y) 2 cos(2 pi n x),
// assembled in log-space.  One instance caches rows keyed by y, so repeated
// x-values at the same height cost only the cosine assembly; instances are
// not safe for concurrent use (create one per thread).
class EisensteinEvaluator {
  public:
    explicit EisensteinEvaluator(SpectralPoint s, TruncationPolicy policy = {});

    // Reduces z to the fundamental domain first (E is Gamma-invariant).
    Complex operator()(const domain::HalfPlanePoint& z);

    // No reduction; valid for any y > 0 but N grows like 1/y.
    Complex eval_raw(double x, double y);

    // a_n(y, s) for n >= 0; a_0 = y^s + phi(s) y^{1-s}.
    LogComplex coefficient(long n, double y);

    long truncation_at(double y);

    // Magnitude of the first omitted Fourier term at height y (times the
    // worst-case cosine factor 2); the attached error estimate.
    double err_estimate_at(double y);

    // Largest err_estimate_at seen over all rows touched so far.
    double max_err_seen() const { return max_err_seen_; }

    SpectralPoint s() const { return s_; }

  private:
    struct Row {
        long n_used;
        std::vector<LogComplex> terms;  // terms[n-1] = a_n(y, s)
        double first_omitted;
    };
    const Row& row(double y);

    SpectralPoint s_;
    TruncationPolicy policy_;
    LogComplex phi_;
    LogComplex two_over_xi2s_;
    Complex nu_;  // Bessel order s - 1/2
    std::map<double, Row> cache_;
    double max_err_seen_ = 0.0;
};

// One-shot wrapper around EisensteinEvaluator (reduces z first).
Complex eisenstein_fourier(const domain::HalfPlanePoint& z, SpectralPoint s,
                           const TruncationPolicy& policy = {});

// Independent oracle: E(z, s) from the lattice double sum, regrouped as
//   E = y^s (1 + [sum_{c=1}^{c_max} S(cx mod 1, cy, s) + mean tail]/zeta(2s)),
// where S(xi, eta, s) = sum_j ((xi+j)^2 + eta^2)^{-s} is evaluated by direct
// terms plus Euler-Maclaurin tails.  Requires Re s >= 1.05.  c_max = 0 picks
// max(10, ceil(8/y)) after reduction, which drives the neglected oscillatory
// part below 1e-12 relative.
Complex eisenstein_lattice(const domain::HalfPlanePoint& z, SpectralPoint s, long c_max = 0);

// Partial regrouped sum without the mean tail: y^s (1 + sum_{c<=c_max} S/zeta(2s)).
// Increasing in c_max for real s (positive terms); exposed for convergence tests.
Complex eisenstein_lattice_shells(const domain::HalfPlanePoint& z, SpectralPoint s, long c_max);

// Built-in weight family h_lambda(y) = exp(-(lambda y + 1/(lambda y))),
// rapidly decaying at both 0 and infinity.
struct WeightFunction {
    double lambda = 1.0;

    double operator()(double y) const;
};

// Mellin transform H(s) = integral_0^inf h(y) y^{-s} dy/y; closed form
// lambda^s 2 K_s(2) for the built-in family.
Complex mellin_transform(const WeightFunction& h, Complex s);

// Incomplete Eisenstein series F_h(z) = sum_{Gamma_inf \ Gamma} h(Im gamma z).
double incomplete_eisenstein(const domain::HalfPlanePoint& z, const WeightFunction& h,
                             long c_max = 12);

// (1/2 pi i) contour integral of E(z, .) over the circle |s - rho| = radius by
// trapezoid rule, with automatic node doubling.  Centers within 0.05 of a
// scattering pole 1/4 + i tau_n/2 are validated against the refined zero to
// 1e-8; other centers are allowed (analytic integrand, residue 0).
Complex residue_at_pole(const domain::HalfPlanePoint& z, Complex rho, double radius = 1e-3,
                        int nodes = 128);

// Same contour applied to phi.
Complex residue_of_phi(Complex rho, double radius = 1e-3, int nodes = 128);

// Scattering state u_rho(z) = res_{s=rho} E(z, s) / res_{s=rho} phi(s).
// Fast path: the residue identity collapses to E(z, 1 - rho).
Complex scattering_state(const domain::HalfPlanePoint& z, Complex rho);

// Slow path through the two contour integrals, for cross-validation.
Complex scattering_state_contour(const domain::HalfPlanePoint& z, Complex rho,
                                 double radius = 1e-3, int nodes = 128);

}  // namespace eis::eisenstein
