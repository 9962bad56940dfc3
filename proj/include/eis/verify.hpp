#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eis::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0;  // worst observed deviation
    double tolerance = 0;
    double seconds = 0;
    std::string detail;
};

// Identity suite: functional-equation, phi-unitarity, xi-symmetry, ramanujan,
// bessel-moment, residue-identity, and for the full suite also
// parseval-unfolding, the t = 100 functional-equation entry and the t = 500
// phi-derivative trend.  Sampling is driven by the seed only.
std::vector<CheckResult> run_suite(bool full, std::uint64_t seed);

bool all_pass(const std::vector<CheckResult>& results);

std::string render_text(const std::vector<CheckResult>& results);

}  // namespace eis::verify
