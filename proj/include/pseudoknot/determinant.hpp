#pragma once

#include <cstdint>

#include "pseudoknot/gauss_diagram.hpp"

namespace pk {

// |Alexander polynomial at -1| of a classical knot diagram, from the Fox
// coloring matrix with one row and column removed. Empty diagram -> 1.
// Throws HasPrecrossings or NotRealizable.
std::uint64_t determinant(const GaussDiagram& d);

}  // namespace pk
