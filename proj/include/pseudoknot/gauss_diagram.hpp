#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pseudoknot/errors.hpp"

namespace pk {

// Decoration of a chord: a classical crossing with sign +1/-1, or a
// precrossing (no sign; its arrow points as for the positive resolution).
class ChordKind {
 public:
  static ChordKind classical(int sign);
  static ChordKind precrossing() { return ChordKind(0); }

  bool is_precrossing() const { return sign_ == 0; }
  bool is_classical() const { return sign_ != 0; }
  // +1 or -1 for classical chords, 0 for precrossings.
  int sign() const { return sign_; }

  auto operator<=>(const ChordKind&) const = default;

 private:
  explicit ChordKind(int sign) : sign_(static_cast<std::int8_t>(sign)) {}
  std::int8_t sign_;
};

// Tail = over-strand passage (arrow tail). For a precrossing, the passage
// that is over when the precrossing is resolved positively.
enum class Role : std::uint8_t { tail, head };

inline Role opposite(Role r) { return r == Role::tail ? Role::head : Role::tail; }

struct Endpoint {
  int chord;
  Role role;

  auto operator<=>(const Endpoint&) const = default;
};

// A pseudo-Gauss diagram: the cyclic endpoint word read along the oriented
// core circle from a basepoint, plus the decoration of every chord.
// Immutable once constructed; the constructor validates the two-endpoint rule.
class GaussDiagram {
 public:
  GaussDiagram() = default;
  GaussDiagram(std::vector<Endpoint> word, std::map<int, ChordKind> chords);

  const std::vector<Endpoint>& word() const { return word_; }
  const std::map<int, ChordKind>& chords() const { return chords_; }

  std::size_t chord_count() const { return chords_.size(); }
  std::size_t length() const { return word_.size(); }
  bool empty() const { return chords_.empty(); }
  bool has_chord(int id) const { return chords_.contains(id); }

  ChordKind kind(int id) const;
  std::size_t tail_position(int id) const { return positions(id)[0]; }
  std::size_t head_position(int id) const { return positions(id)[1]; }
  // {tail position, head position}
  const std::array<std::size_t, 2>& positions(int id) const;
  std::size_t position(int id, Role role) const {
    return positions(id)[role == Role::tail ? 0 : 1];
  }

  int precrossing_count() const;
  int max_chord_id() const { return chords_.empty() ? 0 : chords_.rbegin()->first; }
  std::vector<int> classical_chords() const;
  std::vector<int> precrossing_chords() const;

  bool operator==(const GaussDiagram& other) const {
    return word_ == other.word_ && chords_ == other.chords_;
  }

 private:
  std::vector<Endpoint> word_;
  std::map<int, ChordKind> chords_;
  std::map<int, std::array<std::size_t, 2>> positions_;
};

// Text format: space separated tokens O<id>± / U<id>± / Po<id> / Pu<id>.
GaussDiagram parse_gauss_code(std::string_view text);
std::string format_gauss_code(const GaussDiagram& d);

// Least serialization over all rotations, ids relabeled by first occurrence.
std::string canonical_code(const GaussDiagram& d);
// Compact byte key with the same equivalence as canonical_code (rotation +
// relabeling); cheaper, used for hashing inside searches.
std::string canonical_key(const GaussDiagram& d);
// The diagram whose serialization is canonical_code(d).
GaussDiagram canonical_form(const GaussDiagram& d);

GaussDiagram resolve(const GaussDiagram& d, int chord, int sign);
// All 2^p resolutions, ordered lexicographically over (chord id, sign) with
// + before -.
std::vector<GaussDiagram> all_resolutions(const GaussDiagram& d);
// Resolve every precrossing, chord i of precrossing_chords() with signs[i].
GaussDiagram resolve_all(const GaussDiagram& d, const std::vector<int>& signs);

GaussDiagram crossing_change(const GaussDiagram& d, int chord);

// Realizability of the underlying unsigned Gauss word by a planar curve.
bool is_realizable(const GaussDiagram& d);

// Do chords a and b interleave on the circle.
bool chords_interleave(const GaussDiagram& d, int a, int b);

}  // namespace pk
