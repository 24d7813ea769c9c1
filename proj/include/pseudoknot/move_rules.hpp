#pragma once

#include <array>

#include "pseudoknot/gauss_diagram.hpp"

// Local rewrite rules of the classical and pseudo-Reidemeister moves, as
// patterns on Gauss diagrams. A "segment" is a pair of cyclically
// consecutive endpoints with nothing between them; the rest of the circle
// may carry any endpoints.
namespace pk::rules {

// R1: one classical chord whose endpoints form a segment.
struct R1Rule {
  int sign;
  Role first;  // role of the endpoint met first along the segment
};

// PR1: one precrossing chord whose endpoints form a segment.
struct PR1Rule {
  Role first;
};

// R2: chords a, b of opposite sign; a tail segment (Ta Tb) and a head
// segment, (Ha Hb) when the strands are parallel or (Hb Ha) otherwise.
struct R2Rule {
  int sign_a;
  bool antiparallel;
};

// R3: classical chords x (top/middle strand), y (top/bottom), z
// (middle/bottom). Segments: top = {Tx, Ty}, middle = {Hx, Tz},
// bottom = {Hy, Hz}. The move reverses all three segments.
struct R3Rule {
  bool x_before_y_on_top;
  bool x_before_z_on_middle;
  bool y_before_z_on_bottom;
  int sign_x, sign_y, sign_z;
};

// PR2: precrossing p and classical c of the same two strands, adjacent on
// both. Segment T holds p's tail, segment H holds p's head. The move swaps
// both segments and reverses both arrows; signs are kept.
struct PR2Rule {
  bool p_first_on_t;
  bool p_first_on_h;
  int sign_c;
  Role c_role_on_t;
};

// PR3: strand C crosses the two strands A, B of precrossing z, passing over
// both (C carries the tails of x, y) or under both (C carries the heads).
// x is the classical chord met first on C; A is x's other strand.
// Segments: C = {x, y}, A = {x, z}, B = {y, z}. The move reverses all three.
struct PR3Rule {
  bool over;
  bool x_before_z_on_a;
  bool y_before_z_on_b;
  bool z_tail_on_a;
  int sign_x, sign_y;
};

extern const std::array<R1Rule, 4> kR1;
extern const std::array<PR1Rule, 2> kPR1;
extern const std::array<R2Rule, 4> kR2;
extern const std::array<R3Rule, 16> kR3;
extern const std::array<PR2Rule, 8> kPR2;
extern const std::array<PR3Rule, 16> kPR3;

}  // namespace pk::rules
