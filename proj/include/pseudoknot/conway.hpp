#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pseudoknot/gauss_diagram.hpp"

namespace pk {

// A unit entry of a twist vector: a positive or negative half twist, or a
// precrossing ('i').
enum class ConwayEntry { positive, negative, precrossing };

// Rational Conway notation, one twist vector per term.
struct ConwayExpr {
  std::vector<std::vector<ConwayEntry>> terms;

  std::size_t entry_count() const;
};

// term := INT | '(' entry (',' entry)* ')'; entry := INT | 'i' | '-' INT.
// Integers n expand to |n| unit entries of their sign. Terms may be separated
// by whitespace or nothing. Throws EmptyExpr / ParseError.
ConwayExpr parse_conway(std::string_view text);
// Every term parenthesized, e.g. "(i,1,1) (1) (-1,-1)".
std::string format_conway(const ConwayExpr& e);

// Slots of a 4-valent vertex in counterclockwise order, as drawn inside a
// tangle: 0 = NE, 1 = NW, 2 = SW, 3 = SE. The two strands through the vertex
// join slots 0-2 and 1-3.
struct PlanarVertex {
  bool precrossing = false;
  int over_strand = 0;  // classical: 0 if strand 0-2 is over, 1 if 1-3
  int term = 0;         // originating term and entry of the expression
  int entry = 0;
};

struct PlanarPseudodiagram {
  std::vector<PlanarVertex> vertices;
  // link[4v+s] = 4w+t: slot s of vertex v is joined by an edge to slot t of w.
  std::vector<int> link;

  std::size_t vertex_count() const { return vertices.size(); }
};

// Standard rational tangle assembly followed by the numerator closure.
// Throws MultiComponent if the closure is a link.
PlanarPseudodiagram build_pseudodiagram(const ConwayExpr& e);

// Walks the diagram from vertex 0, entering at slot 0; chord v+1 is vertex v.
// Throws MultiComponent.
GaussDiagram pd_to_gauss(const PlanarPseudodiagram& p);

// parse -> build -> trace.
GaussDiagram conway_to_gauss(std::string_view text);

}  // namespace pk
