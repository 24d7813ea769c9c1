#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "pseudoknot/homotopy.hpp"

namespace pk {

inline constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

// One crossing change of an unknotting witness: `before` with `chord`
// changed, then simplified along `simplification`. For u_jb the
// simplification starts at canonical_form(changed).
struct UnknotStep {
  GaussDiagram before;
  int chord = 0;
  GaussDiagram changed;
  MovePath simplification;  // from `changed`; ends at the next step's `before`

  GaussDiagram after() const { return simplification.end(); }
};

// When the input already simplifies to the unknot the witness is a single
// step with chord 0 holding that simplification.
struct UnknottingResult {
  std::size_t lower = 0;
  std::size_t upper = kInfinity;  // kInfinity: no unknotting found
  std::vector<UnknotStep> witness;

  bool exact() const { return lower == upper; }
};

// Crossing changes done simultaneously in the fixed diagram: every k-subset
// of classical chords for k = 0..k_max, each judged by nontrivial_certificate.
// A nonempty Ih gives lower = upper = kInfinity.
UnknottingResult unknotting_fixed(const GaussDiagram& d, std::size_t k_max, const SearchBudget& budget);

// Budget policy for the simplifications of u_jb: the changed diagram's chord
// count plus `extra_chords`, and `max_states` states.
struct UnknotBudget {
  std::size_t extra_chords = 2;
  std::size_t max_states = 100000;
};

// Bernhard-Jablan unknotting: change one crossing, replace the result by the
// least diagram simplify_with_path finds, repeat. Levels are explored
// breadth-first up to depth_max; simplifications are memoized on canonical
// keys. `lower` is the first level holding a diagram no certificate proves
// nontrivial.
UnknottingResult u_jb(const GaussDiagram& d, std::size_t depth_max, const UnknotBudget& budget = {});

}  // namespace pk
