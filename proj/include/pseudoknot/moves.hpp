#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pseudoknot/gauss_diagram.hpp"

namespace pk {

// CC (crossing change) is not a Reidemeister move; it only appears in
// homotopy paths.
enum class MoveFamily { R1, R2, R3, PR1, PR2, PR3, CC };

enum class MoveDirection { insert, remove, slide };

struct MoveKind {
  MoveFamily family;
  int variant;  // index into the family's rule table (move_rules.hpp)

  auto operator<=>(const MoveKind&) const = default;
};

// One applicable instance of a rule.
//  insert: site = gap indices (gap g lies just before word position g);
//          R2 uses {tail gap, head gap, heads-block-first} where the last
//          entry is only nonzero when both gaps coincide.
//  remove: site = chord ids being deleted.
//  slide:  site = chord ids of the pattern (R3/PR3: x, y, z; PR2: p, c;
//          CC: the changed chord).
struct MoveApplication {
  MoveKind kind;
  MoveDirection direction;
  std::vector<int> site;

  auto operator<=>(const MoveApplication&) const = default;
};

// Subsets of the move relation, for searches that expand lazily.
enum MoveSet : unsigned {
  kRemovals = 1u,
  kSlides = 2u,
  kInsertions = 4u,
  kAllMoves = kRemovals | kSlides | kInsertions,
};

std::vector<MoveApplication> applicable_moves(const GaussDiagram& d, unsigned set = kAllMoves);

// Throws InapplicableMove unless m is in applicable_moves(d).
GaussDiagram apply_move(const GaussDiagram& d, const MoveApplication& m);

// No applicability check; m must come from applicable_moves(d) (or be a
// crossing change of a classical chord).
GaussDiagram apply_move_unchecked(const GaussDiagram& d, const MoveApplication& m);

// Images of all applicable moves, one per canonical class, in move order.
std::vector<GaussDiagram> neighbors(const GaussDiagram& d);

MoveApplication crossing_change_move(int chord);

// Net change of chord count for a family/direction.
int chord_delta(const MoveApplication& m);

// "<family>.<variant> <Insert|Delete|Slide> @ <site>"
std::string format_move(const MoveApplication& m);
std::string family_name(MoveFamily f);

}  // namespace pk
