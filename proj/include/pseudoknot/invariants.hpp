#pragma once

#include <map>
#include <string>
#include <vector>

#include "pseudoknot/gauss_diagram.hpp"

namespace pk {

enum class LabelRing { Z, Z2 };

// Undirected chord diagram with integer (Z) or bit (Z2) chord labels.
struct DecoratedChordDiagram {
  std::vector<int> word;  // each chord id exactly twice, in circle order
  std::map<int, int> labels;
  LabelRing ring = LabelRing::Z;

  std::size_t chord_count() const { return labels.size(); }
  bool empty() const { return labels.empty(); }
};

// Throws UnknownChord if a or b is absent.
bool chords_intersect(const GaussDiagram& d, int a, int b);
bool chords_intersect(const DecoratedChordDiagram& c, int a, int b);

// Steps 1-3 of the invariant: prechords labeled by the signed count of
// classical arrows crossing them, classical arrows removed.
DecoratedChordDiagram prechord_diagram(const GaussDiagram& d);

// Labels reduced mod 2 (ring Z2).
DecoratedChordDiagram reduce_mod2(const DecoratedChordDiagram& c);

// Chords with cyclically adjacent endpoints and label 0.
std::vector<int> deletable_chords(const DecoratedChordDiagram& c);
DecoratedChordDiagram delete_chord(const DecoratedChordDiagram& c, int id);
// Repeats deletion until no chord is deletable. The result does not depend
// on the order, so the lowest id is always taken.
DecoratedChordDiagram delete_to_fixed_point(DecoratedChordDiagram c);

DecoratedChordDiagram compute_I(const GaussDiagram& d);
DecoratedChordDiagram compute_Ih(const GaussDiagram& d);

// "ids in circle order ; labels in id order", least over rotations with ids
// relabeled by first occurrence. Empty diagram -> "".
std::string canonical_decorated(const DecoratedChordDiagram& c);

}  // namespace pk
