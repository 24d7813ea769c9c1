#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pseudoknot/search.hpp"

namespace pk {

enum class Verdict {
  trivial_by_path,
  nontrivial_by_i,
  nontrivial_by_ih,
  nontrivial_by_resolution_det,
  unknown,
};

std::string verdict_name(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::unknown;
  std::optional<MovePath> path;          // trivial_by_path
  std::string invariant;                 // nontrivial_by_i / _ih: the nonempty value
  std::vector<int> resolution_signs;     // nontrivial_by_resolution_det, per precrossing_chords()
  std::uint64_t resolution_determinant = 0;

  bool trivial() const { return verdict == Verdict::trivial_by_path; }
  bool nontrivial() const { return verdict != Verdict::trivial_by_path && verdict != Verdict::unknown; }
};

// Invariant-based part only: I, then Ih, then the determinant of every
// resolution (realizable diagrams only). Never returns trivial_by_path.
Certificate invariant_certificate(const GaussDiagram& d);

// Full certificate. The cheap invariant checks run before the triviality
// search; both are sound, so the order only affects running time.
Certificate nontrivial_certificate(const GaussDiagram& d, const SearchBudget& budget);

struct HomotopyResult {
  std::optional<MovePath> path;  // set iff homotopic within budget
  SearchStats stats;
  std::string ih_a, ih_b;        // Ih values; different values prove the pair is not homotopic

  bool homotopic() const { return path.has_value(); }
  bool obstructed() const { return ih_a != ih_b; }
};

// Search over moves and crossing changes. Skips the search when Ih already
// separates the inputs. Throws BudgetInvalid.
HomotopyResult homotopy_equivalent_bounded(const GaussDiagram& a, const GaussDiagram& b, const SearchBudget& budget);

}  // namespace pk
