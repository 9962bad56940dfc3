#pragma once

#include <stdexcept>
#include <string>

namespace eis {

// Exit-code contract used by the CLI: usage errors map to 2,
// numeric-domain errors (everything below) to 3, verification failures to 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation requested at (or indistinguishably close to) a pole.
struct PoleError : Error {
    using Error::Error;
};

// Input outside an operation's stated precondition.
struct DomainError : Error {
    using Error::Error;
};

// Requested tolerance could not be certified within the budget.
struct ToleranceError : Error {
    using Error::Error;
};

// A configured hard ceiling (oscillation budget, truncation cap, height
// ceiling) was exceeded before the computation could start or finish.
struct BudgetError : Error {
    using Error::Error;
};

// Malformed textual input (zero tables, CLI argument payloads).
struct ParseError : Error {
    using Error::Error;
};

// Zero refinement could not bracket a sign change.
struct NoSignChangeError : Error {
    using Error::Error;
};

}  // namespace eis
