#include "pseudoknot/invariants.hpp"

#include <algorithm>
#include <optional>

namespace pk {

namespace {

bool interleaved(std::size_t a0, std::size_t a1, std::size_t b0, std::size_t b1) {
  auto lo = std::min(a0, a1), hi = std::max(a0, a1);
  auto inside = [&](std::size_t p) { return p > lo && p < hi; };
  return inside(b0) != inside(b1);
}

std::array<std::size_t, 2> find_pair(const std::vector<int>& word, int id) {
  std::array<std::size_t, 2> out{};
  int k = 0;
  for (std::size_t i = 0; i < word.size() && k < 2; ++i)
    if (word[i] == id) out[k++] = i;
  if (k != 2) throw UnknownChord("unknown chord " + std::to_string(id));
  return out;
}

// Serialization of c read from position r, ids relabeled by first occurrence;
// also returns the relabeled diagram.
std::pair<std::string, DecoratedChordDiagram> rotated(const DecoratedChordDiagram& c, std::size_t r) {
  const std::size_t n = c.word.size();
  std::map<int, int> relabel;
  DecoratedChordDiagram out;
  out.ring = c.ring;
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    int id = c.word[(r + i) % n];
    auto [it, fresh] = relabel.emplace(id, static_cast<int>(relabel.size()) + 1);
    out.word.push_back(it->second);
    if (fresh) out.labels[it->second] = c.labels.at(id);
    if (i) s += ' ';
    s += std::to_string(it->second);
  }
  s += " ;";
  for (const auto& [id, label] : out.labels) s += " " + std::to_string(label);
  return {std::move(s), std::move(out)};
}

std::pair<std::string, DecoratedChordDiagram> canonical_pair(const DecoratedChordDiagram& c) {
  if (c.empty()) return {"", DecoratedChordDiagram{{}, {}, c.ring}};
  std::optional<std::pair<std::string, DecoratedChordDiagram>> best;
  for (std::size_t r = 0; r < c.word.size(); ++r) {
    auto cand = rotated(c, r);
    if (!best || cand.first < best->first) best = std::move(cand);
  }
  return std::move(*best);
}

}  // namespace

bool chords_intersect(const GaussDiagram& d, int a, int b) {
  if (!d.has_chord(a) || !d.has_chord(b)) throw UnknownChord("unknown chord");
  return chords_interleave(d, a, b);
}

bool chords_intersect(const DecoratedChordDiagram& c, int a, int b) {
  if (a == b) throw InvalidOperation("a chord does not intersect itself");
  auto pa = find_pair(c.word, a), pb = find_pair(c.word, b);
  return interleaved(pa[0], pa[1], pb[0], pb[1]);
}

DecoratedChordDiagram prechord_diagram(const GaussDiagram& d) {
  DecoratedChordDiagram out;
  const auto pre = d.precrossing_chords();
  const auto classical = d.classical_chords();
  for (int p : pre) {
    int label = 0;
    for (int c : classical)
      if (chords_interleave(d, p, c)) label += d.kind(c).sign();
    out.labels[p] = label;
  }
  for (const auto& e : d.word())
    if (d.kind(e.chord).is_precrossing()) out.word.push_back(e.chord);
  return out;
}

DecoratedChordDiagram reduce_mod2(const DecoratedChordDiagram& c) {
  DecoratedChordDiagram out = c;
  out.ring = LabelRing::Z2;
  for (auto& [id, label] : out.labels) label = ((label % 2) + 2) % 2;
  return out;
}

std::vector<int> deletable_chords(const DecoratedChordDiagram& c) {
  std::vector<int> out;
  const std::size_t n = c.word.size();
  for (const auto& [id, label] : c.labels) {
    if (label != 0) continue;
    auto p = find_pair(c.word, id);
    if (p[1] - p[0] == 1 || (p[0] == 0 && p[1] == n - 1)) out.push_back(id);
  }
  return out;
}

DecoratedChordDiagram delete_chord(const DecoratedChordDiagram& c, int id) {
  if (!c.labels.contains(id)) throw UnknownChord("unknown chord " + std::to_string(id));
  DecoratedChordDiagram out = c;
  std::erase(out.word, id);
  out.labels.erase(id);
  return out;
}

DecoratedChordDiagram delete_to_fixed_point(DecoratedChordDiagram c) {
  for (;;) {
    auto del = deletable_chords(c);
    if (del.empty()) return c;
    c = delete_chord(c, del.front());
  }
}

DecoratedChordDiagram compute_I(const GaussDiagram& d) {
  return canonical_pair(delete_to_fixed_point(prechord_diagram(d))).second;
}

DecoratedChordDiagram compute_Ih(const GaussDiagram& d) {
  return canonical_pair(delete_to_fixed_point(reduce_mod2(prechord_diagram(d)))).second;
}

std::string canonical_decorated(const DecoratedChordDiagram& c) { return canonical_pair(c).first; }

}  // namespace pk
