#pragma once

#include <string>
#include <vector>

#include "eis/domain.hpp"
#include "eis/types.hpp"

namespace eis::cli {

// "re,im" or a bare real; throws ParseError (usage) on anything else.
Complex parse_pair(const std::string& text);

// Comma-separated reals, at least one.
std::vector<double> parse_list(const std::string& text);

// "x0,x1,y0,y1[;x0,x1,y0,y1...]"; geometric validation failures are reported
// as ParseError so they land on the usage exit code.
domain::JordanRegion parse_region(const std::string& text);

// Full command dispatch; returns the process exit code
// (0 ok, 1 verification failure, 2 usage, 3 numeric-domain).
int run(int argc, const char* const* argv);

}  // namespace eis::cli
