#pragma once

#include <iosfwd>
#include <string_view>

#include "pseudoknot/gauss_diagram.hpp"

namespace pk {

// Exit codes of the `pk` tool.
inline constexpr int kExitAffirmative = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInvalidInput = 65;

// A Gauss code, a Conway symbol (starts with '(', a digit or '-'), or the
// empty string for the empty diagram.
GaussDiagram read_diagram(std::string_view text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pk
