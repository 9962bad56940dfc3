#include "eis/zeros.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>

#include "eis/errors.hpp"
#include "eis/special.hpp"

namespace eis::zeros {

namespace {

const double kSeeds[] = {
    14.134725, 21.022040, 25.010858, 30.424876, 32.935062, 37.586178, 40.918719,
    43.327073, 48.005151, 49.773832, 52.970321, 56.446248, 59.347044, 60.831779,
    65.112544, 67.079811, 69.546402, 72.067158, 75.704691, 77.144840, 79.337375,
    82.910381, 84.735493, 87.425275, 88.809111,
};

double xi_line(double tau) { return numerics::xi_on_critical_line(tau).value; }

}  // namespace

ZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("load_zeros: cannot open " + path);
    ZeroTable t;
    t.source = path;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        const char* begin = line.c_str() + start;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError("load_zeros: line " + std::to_string(lineno) + ": not a number");
        while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
        if (*end != '\0')
            throw ParseError("load_zeros: line " + std::to_string(lineno) + ": trailing garbage");
        if (!(v > 13.0))
            throw ParseError("load_zeros: line " + std::to_string(lineno) +
                             ": ordinate must exceed 13");
        if (!t.taus.empty() && v <= t.taus.back())
            throw ParseError("load_zeros: line " + std::to_string(lineno) +
                             ": entries must be strictly increasing");
        t.taus.push_back(v);
    }
    t.refined.assign(t.taus.size(), false);
    return t;
}

ZeroTable seed_table() {
    ZeroTable t;
    t.taus.assign(std::begin(kSeeds), std::end(kSeeds));
    t.refined.assign(t.taus.size(), false);
    t.source = "builtin-seeds";
    return t;
}

double refine_zero(double tau_approx) {
    if (!(tau_approx > 13.0)) throw DomainError("refine_zero: tau must exceed 13");
    // Scan grid points tau + 0.05k outward for adjacent values of opposite
    // sign, nearest interval first.
    auto grid = [&](int k) { return tau_approx + 0.05 * k; };
    double fval[21];
    bool have[21] = {};
    auto f_at = [&](int k) {
        if (!have[k + 10]) {
            fval[k + 10] = xi_line(grid(k));
            have[k + 10] = true;
        }
        return fval[k + 10];
    };
    double lo = 0, hi = 0, flo = 0;
    bool found = false;
    for (int k = 0; k < 10 && !found; ++k) {
        for (int a : {k, -k - 1}) {
            double fa = f_at(a), fb = f_at(a + 1);
            // A grid point can land on the zero itself (idempotent calls do);
            // the scaled xi then collapses to exactly 0.
            if (fa == 0.0 || fb == 0.0) {
                lo = hi = grid(fa == 0.0 ? a : a + 1);
                found = true;
                break;
            }
            if (fa * fb < 0) {
                lo = grid(a);
                hi = grid(a + 1);
                flo = fa;
                found = true;
                break;
            }
        }
    }
    if (!found) throw NoSignChangeError("refine_zero: no sign change within +-0.5 of tau");
    for (int it = 0; it < 64 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = xi_line(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if (fm * flo < 0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    double tau = 0.5 * (lo + hi);
    // Simple-crossing assertion: the slope must be resolvable against the
    // neighborhood scale of xi on the line.
    double h = 1e-5;
    auto at = [](double u) { return numerics::xi_on_critical_line(u); };
    numerics::ScaledReal fp = at(tau + h), fmv = at(tau - h), ref = at(tau + 0.1);
    double scale_log = ref.log_scale;
    double deriv = (fp.value * std::exp(fp.log_scale - scale_log) -
                    fmv.value * std::exp(fmv.log_scale - scale_log)) /
                   (2 * h);
    if (!(std::abs(deriv) * 0.1 > 1e-5 * std::abs(ref.value)))
        throw Error("refine_zero: crossing at tau=" + std::to_string(tau) + " is not simple");
    return tau;
}

void refine_entries(ZeroTable& table, long count) {
    long n = count < 0 ? long(table.size()) : count;
    if (n > long(table.size())) throw DomainError("refine_entries: count exceeds table size");
    for (long i = 0; i < n; ++i) {
        if (table.refined[i]) continue;
        table.taus[i] = refine_zero(table.taus[i]);
        table.refined[i] = true;
    }
}

std::vector<Complex> scattering_poles(const ZeroTable& table, long count) {
    if (count < 0 || count > long(table.size()))
        throw DomainError("scattering_poles: count out of range");
    std::vector<Complex> out;
    out.reserve(count);
    for (long i = 0; i < count; ++i) {
        if (!table.refined[i])
            throw Error("scattering_poles: entry " + std::to_string(i) + " is not refined");
        out.emplace_back(0.25, table.taus[i] / 2);
    }
    return out;
}

}  // namespace eis::zeros
