#pragma once

#include <string>
#include <vector>

#include "eis/types.hpp"

namespace eis::zeros {

// Ordinates tau_n of the nontrivial zeta zeros 1/2 + i tau_n.  Entries are
// seeds until refined; consumers that need pole locations must refine first.
struct ZeroTable {
    std::vector<double> taus;
    std::vector<bool> refined;
    std::string source;

    std::size_t size() const { return taus.size(); }
    bool empty() const { return taus.empty(); }
};

// Plain text, one positive decimal per line, '#' starts a comment line.
// Entries must be strictly increasing and > 13.
ZeroTable load_zeros(const std::string& path);

// Built-in seed ordinates for the first 25 zeros (6-8 correct digits; always
// re-refined before use).
ZeroTable seed_table();

// Sign-change bisection of the real-valued map tau -> xi(1/2 + i tau) to
// |delta tau| < 1e-10.  Requires a sign change within +-0.5 of tau_approx
// and asserts the crossing is simple.
double refine_zero(double tau_approx);

// Refine entries [0, count) in place (count < 0 refines all).
void refine_entries(ZeroTable& table, long count = -1);

// First `count` scattering poles rho_n = (1/2 + i tau_n)/2.  Entries used
// must be refined.
std::vector<Complex> scattering_poles(const ZeroTable& table, long count);

}  // namespace eis::zeros
