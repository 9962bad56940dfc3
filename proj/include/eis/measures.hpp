#pragma once

#include <string>
#include <vector>

#include "eis/domain.hpp"
#include "eis/eisenstein.hpp"
#include "eis/quadrature.hpp"
#include "eis/types.hpp"

namespace eis::measures {

using domain::JordanRegion;
using eisenstein::TruncationPolicy;
using eisenstein::WeightFunction;

struct MeasureResult {
    double value = 0;
    double err_est = 0;
};

// mu_{s}(A) = integral_A |E(z, s)|^2 dmu(z).  The region's Fourier-mode hint
// is raised to the truncation N at y_min before quadrature.
MeasureResult quantum_measure(const JordanRegion& A, SpectralPoint s,
                              const QuadratureSpec& spec = {},
                              const TruncationPolicy& policy = {});

// integral_A E(z, 2 sigma_inf) dmu(z); requires sigma_inf > 1/2 so the
// integrand is positive.
double limit_target(const JordanRegion& A, double sigma_inf, const QuadratureSpec& spec = {},
                    const TruncationPolicy& policy = {});

// nu_{s}(A) = integral_A |E(z, s)|^2 / E(z, 2 sigma_inf) dmu(z).
MeasureResult nu_measure(const JordanRegion& A, SpectralPoint s, double sigma_inf,
                         const QuadratureSpec& spec = {}, const TruncationPolicy& policy = {});

// quantum_measure(A, sigma_t + it) / (mu(A) (6/pi) log t); requires t > e.
double luo_sarnak_ratio(const JordanRegion& A, double t, double sigma_t,
                        const QuadratureSpec& spec = {}, const TruncationPolicy& policy = {});

// Unfolding identity: lhs = integral over the fundamental domain of
// F_h |E|^2 dmu, rhs = integral_0^inf h(y) sum_{|n| <= n_max} |a_n(y,s)|^2
// dy/y^2; gap = |lhs - rhs|.
struct ParsevalReport {
    double lhs = 0, rhs = 0, gap = 0;
};
ParsevalReport parseval_check(const WeightFunction& h, SpectralPoint s, long n_max,
                              const QuadratureSpec& spec = {},
                              const TruncationPolicy& policy = {});

// Central finite difference of log phi along sigma at sigma + it.  Requires
// |t| >= 10, sigma >= 1/2 (which keeps clear of the pole line Re s = 1/4),
// 0 < step <= 1e-4.
Complex phi_log_derivative(double t, double sigma, double step);

// Diagnostic companion: the two-sided sum [D(t) + D(-t)] normalized by
// -4 log |t|; approaches 1 slowly from below as t grows.
double phi_log_derivative_ratio(double t, double sigma = 0.5, double step = 1e-5);

// sigma_t families: constant sigma_0 > 1/2, the critical line, or the
// approach schedule 1/2 + c/(log t)^p with p > 1 so (sigma_t - 1/2) log t -> 0.
struct SigmaSchedule {
    enum class Kind { constant, critical, approach };
    Kind kind = Kind::constant;
    double sigma0 = 0.75;
    double c = 1.0, p = 2.0;

    double sigma_at(double t) const;
    std::string describe() const;

    // "const:<sigma0>" | "critical" | "approach:<c>,<p>". Anything else is a
    // parse error; invariant violations (sigma0 <= 1/2, p <= 1, c < 0) too.
    static SigmaSchedule parse(const std::string& text);
};

enum class SweepMode { mu, nu, luo_sarnak, scattering };
SweepMode parse_sweep_mode(const std::string& text);
std::string to_string(SweepMode mode);

struct SweepRow {
    std::string mode;
    double t = 0;
    double sigma = 0;
    int region = 0;
    double value = 0;
    double err_est = 0;
    double target = 0;
    double ratio = 0;
    double wall_ms = 0;
    std::string error;  // nonempty when this cell failed; numeric fields NaN
};

struct SweepResult {
    std::vector<SweepRow> rows;

    // stable_output zeroes the wall_ms column so output is byte-identical
    // across runs.
    std::string to_csv(bool stable_output = false) const;
    std::string to_json(bool stable_output = false) const;
    std::string to_text() const;
};

// One row per (region, t), rows ordered by (region index, t).  Cells compute
// independently (optionally across `threads` workers) and cell failures are
// recorded in-row rather than thrown.  Modes:
//   mu          value = mu_{s(t)}(A),   target = integral_A E(z, 2 sigma_t)
//   nu          value = nu_{s(t)}(A),   target = mu(A)
//   luo_sarnak  value = mu_{s(t)}(A),   target = mu(A) (6/pi) log t
//   scattering  t is the zero ordinate tau_n; value = mu at s = 1 - rho_n
//               = 3/4 - i tau_n/2, target = integral_A E(z, 3/2)
// mu/nu require a constant schedule, luo_sarnak a critical/approach one.
SweepResult sweep(const SigmaSchedule& schedule, const std::vector<double>& t_list,
                  const std::vector<JordanRegion>& regions, SweepMode mode,
                  const QuadratureSpec& spec = {}, const TruncationPolicy& policy = {},
                  int threads = 1);

}  // namespace eis::measures
