#include "pseudoknot/move_rules.hpp"

namespace pk::rules {

namespace {
constexpr bool F = false;
constexpr bool T = true;
constexpr Role kTail = Role::tail;
constexpr Role kHead = Role::head;
}  // namespace

// Every kink: either sign, over- or under-passage first.
const std::array<R1Rule, 4> kR1{{
    {+1, kTail},
    {-1, kTail},
    {+1, kHead},
    {-1, kHead},
}};

const std::array<PR1Rule, 2> kPR1{{
    {kTail},
    {kHead},
}};

const std::array<R2Rule, 4> kR2{{
    {+1, F},
    {-1, F},
    {+1, T},
    {-1, T},
}};

// Eight oriented R3 moves, both sides of each. Read off a triangle of three
// lines: every orientation of the lines, every height order, and both
// positions of the third line relative to the crossing of the other two.
// Each row's partner (all three order bits flipped) is its image.
const std::array<R3Rule, 16> kR3{{
    {F, F, F, -1, -1, -1},
    {F, F, F, +1, +1, +1},
    {F, F, T, -1, +1, +1},
    {F, F, T, +1, -1, -1},
    {F, T, F, -1, +1, -1},
    {F, T, F, +1, -1, +1},
    {F, T, T, -1, -1, +1},
    {F, T, T, +1, +1, -1},
    {T, F, F, -1, -1, +1},
    {T, F, F, +1, +1, -1},
    {T, F, T, -1, +1, -1},
    {T, F, T, +1, -1, +1},
    {T, T, F, -1, +1, +1},
    {T, T, F, +1, -1, -1},
    {T, T, T, -1, -1, -1},
    {T, T, T, +1, +1, +1},
}};

// The classical crossing may sit on either side of the precrossing along
// each strand. Resolving p like c (a clasp) is fixed by the move; resolving
// it oppositely gives an R2 bigon on both sides. Hence p's tail shares a
// segment with c's head exactly when c is positive.
const std::array<PR2Rule, 8> kPR2{{
    {F, F, +1, kHead},
    {F, F, -1, kTail},
    {F, T, +1, kHead},
    {F, T, -1, kTail},
    {T, F, +1, kHead},
    {T, F, -1, kTail},
    {T, T, +1, kHead},
    {T, T, -1, kTail},
}};

// Eight PR3 moves (C over: first block; C under: second block, which is the
// first with classical signs and arrows switched), both sides of each.
const std::array<PR3Rule, 16> kPR3{{
    {T, F, F, F, +1, +1},
    {T, F, F, T, -1, -1},
    {T, F, T, F, -1, +1},
    {T, F, T, T, +1, -1},
    {T, T, F, F, +1, -1},
    {T, T, F, T, -1, +1},
    {T, T, T, F, -1, -1},
    {T, T, T, T, +1, +1},
    {F, F, F, F, -1, -1},
    {F, F, F, T, +1, +1},
    {F, F, T, F, +1, -1},
    {F, F, T, T, -1, +1},
    {F, T, F, F, -1, +1},
    {F, T, F, T, +1, -1},
    {F, T, T, F, +1, +1},
    {F, T, T, T, -1, -1},
}};

}  // namespace pk::rules
