#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pseudoknot/gauss_diagram.hpp"
#include "pseudoknot/moves.hpp"

namespace pk {

struct SearchBudget {
  std::size_t max_chords = 0;
  std::size_t max_states = 100000;
};

// Desk defaults: input chord count + 2, 10^5 states.
SearchBudget default_budget(const GaussDiagram& d);
SearchBudget default_budget(const GaussDiagram& a, const GaussDiagram& b);

// A sequence of moves replayable from `start`.
struct MovePath {
  GaussDiagram start;
  std::vector<MoveApplication> moves;

  GaussDiagram end() const;
  std::size_t size() const { return moves.size(); }
  // One line per move, in the trace format of format_move.
  std::string trace() const;
};

struct SearchStats {
  std::size_t states_visited = 0;
  bool exhausted = false;  // stopped because max_states was reached
};

struct EquivalenceResult {
  std::optional<MovePath> path;  // set iff equivalent within budget
  SearchStats stats;

  bool equivalent() const { return path.has_value(); }
};

struct SimplifyResult {
  GaussDiagram diagram;
  MovePath path;  // from the input to `diagram`
  SearchStats stats;
};

struct TrivialityResult {
  std::optional<MovePath> path;  // set iff the empty diagram was reached
  SearchStats stats;

  bool trivial() const { return path.has_value(); }
};

// Adds crossing changes of classical chords to the move relation.
enum class Relation { isotopy, homotopy };

// Bidirectional breadth-first search; layers are expanded in canonical order.
// Throws BudgetInvalid if max_chords is below either input or max_states is 0.
EquivalenceResult equivalent_bounded(const GaussDiagram& a, const GaussDiagram& b, const SearchBudget& budget,
                                     Relation relation = Relation::isotopy);

// Best-first search ordered by (chord count, canonical key); insertion moves
// of a state are only generated after its other moves have been queued.
// Returns the visited diagram of least chord count (ties: least canonical
// key). When the input is realizable, only realizable diagrams are eligible.
// Stops early on reaching the empty diagram.
SimplifyResult simplify_with_path(const GaussDiagram& d, const SearchBudget& budget,
                                  Relation relation = Relation::isotopy);
GaussDiagram simplify_bounded(const GaussDiagram& d, std::size_t max_chords, std::size_t max_states);

TrivialityResult is_trivial_bounded(const GaussDiagram& d, const SearchBudget& budget);

}  // namespace pk
