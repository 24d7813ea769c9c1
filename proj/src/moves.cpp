#include "pseudoknot/moves.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "pseudoknot/move_rules.hpp"

namespace pk {

namespace {

using rules::kPR1;
using rules::kPR2;
using rules::kPR3;
using rules::kR1;
using rules::kR2;
using rules::kR3;

template <typename Table, typename Pred>
int find_variant(const Table& table, Pred pred) {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (pred(table[i])) return static_cast<int>(i);
  return -1;
}

// Cyclic word view with neighbour arithmetic.
struct Cyclic {
  const GaussDiagram& d;
  std::size_t n;

  explicit Cyclic(const GaussDiagram& g) : d(g), n(g.length()) {}
  std::size_t next(std::size_t p) const { return (p + 1) % n; }
  std::size_t prev(std::size_t p) const { return (p + n - 1) % n; }
  const Endpoint& at(std::size_t p) const { return d.word()[p]; }
  ChordKind kind_at(std::size_t p) const { return d.kind(at(p).chord); }
  std::size_t other(std::size_t p) const {
    const auto& e = at(p);
    return d.position(e.chord, opposite(e.role));
  }
};

MoveApplication make(MoveFamily f, int variant, MoveDirection dir, std::vector<int> site) {
  return {{f, variant}, dir, std::move(site)};
}

// ---- insertions ---------------------------------------------------------

std::size_t gap_count(const GaussDiagram& d) { return std::max<std::size_t>(1, d.length()); }

void r1_insertions(const GaussDiagram& d, std::vector<MoveApplication>& out) {
  for (std::size_t g = 0; g < gap_count(d); ++g)
    for (std::size_t v = 0; v < kR1.size(); ++v)
      out.push_back(make(MoveFamily::R1, static_cast<int>(v), MoveDirection::insert, {static_cast<int>(g)}));
}

void pr1_insertions(const GaussDiagram& d, std::vector<MoveApplication>& out) {
  for (std::size_t g = 0; g < gap_count(d); ++g)
    for (std::size_t v = 0; v < kPR1.size(); ++v)
      out.push_back(make(MoveFamily::PR1, static_cast<int>(v), MoveDirection::insert, {static_cast<int>(g)}));
}

void r2_insertions(const GaussDiagram& d, std::vector<MoveApplication>& out) {
  const int gaps = static_cast<int>(gap_count(d));
  for (int gt = 0; gt < gaps; ++gt)
    for (int gh = 0; gh < gaps; ++gh)
      for (int heads_first = 0; heads_first <= (gt == gh ? 1 : 0); ++heads_first)
        for (std::size_t v = 0; v < kR2.size(); ++v)
          out.push_back(make(MoveFamily::R2, static_cast<int>(v), MoveDirection::insert, {gt, gh, heads_first}));
}

// ---- removals ----------------------------------------------------------

void kink_removals(const GaussDiagram& d, bool precrossing, std::vector<MoveApplication>& out) {
  if (d.empty()) return;
  Cyclic w(d);
  for (const auto& [id, k] : d.chords()) {
    if (k.is_precrossing() != precrossing) continue;
    auto t = d.tail_position(id), h = d.head_position(id);
    Role first;
    if (w.next(t) == h) first = Role::tail;
    else if (w.next(h) == t) first = Role::head;
    else continue;
    int v = precrossing ? find_variant(kPR1, [&](const auto& r) { return r.first == first; })
                        : find_variant(kR1, [&](const auto& r) { return r.first == first && r.sign == k.sign(); });
    out.push_back(make(precrossing ? MoveFamily::PR1 : MoveFamily::R1, v, MoveDirection::remove, {id}));
  }
}

void r2_removals(const GaussDiagram& d, std::vector<MoveApplication>& out) {
  if (d.length() < 4) return;
  Cyclic w(d);
  std::vector<MoveApplication> found;
  for (std::size_t p = 0; p < w.n; ++p) {
    const auto& ea = w.at(p);
    const auto& eb = w.at(w.next(p));
    if (ea.role != Role::tail || eb.role != Role::tail || ea.chord == eb.chord) continue;
    auto ka = d.kind(ea.chord), kb = d.kind(eb.chord);
    if (!ka.is_classical() || !kb.is_classical() || ka.sign() != -kb.sign()) continue;
    auto ha = d.head_position(ea.chord), hb = d.head_position(eb.chord);
    bool anti;
    if (w.next(ha) == hb) anti = false;
    else if (w.next(hb) == ha) anti = true;
    else continue;
    int v = find_variant(kR2, [&](const auto& r) { return r.sign_a == ka.sign() && r.antiparallel == anti; });
    found.push_back(make(MoveFamily::R2, v, MoveDirection::remove, {ea.chord, eb.chord}));
  }
  std::sort(found.begin(), found.end());
  out.insert(out.end(), found.begin(), found.end());
}

// ---- slides ------------------------------------------------------------

void r3_slides(const GaussDiagram& d, std::vector<MoveApplication>& out) {
  if (d.length() < 6) return;
  Cyclic w(d);
  std::vector<MoveApplication> found;
  for (std::size_t p = 0; p < w.n; ++p) {
    std::size_t q = w.next(p);
    const auto& e1 = w.at(p);
    const auto& e2 = w.at(q);
    if (e1.role != Role::tail || e2.role != Role::tail || e1.chord == e2.chord) continue;
    if (!w.kind_at(p).is_classical() || !w.kind_at(q).is_classical()) continue;
    for (int x_first = 0; x_first < 2; ++x_first) {
      int x = x_first ? e1.chord : e2.chord;
      int y = x_first ? e2.chord : e1.chord;
      auto hx = d.head_position(x);
      for (std::size_t m : {w.prev(hx), w.next(hx)}) {
        const auto& ez = w.at(m);
        if (ez.role != Role::tail || ez.chord == x || ez.chord == y) continue;
        int z = ez.chord;
        if (!d.kind(z).is_classical()) continue;
        bool x_before_z = m == w.next(hx);
        auto hy = d.head_position(y), hz = d.head_position(z);
        bool y_before_z;
        if (w.next(hy) == hz) y_before_z = true;
        else if (w.next(hz) == hy) y_before_z = false;
        else continue;
        int sx = d.kind(x).sign(), sy = d.kind(y).sign(), sz = d.kind(z).sign();
        int v = find_variant(kR3, [&](const auto& r) {
          return r.x_before_y_on_top == static_cast<bool>(x_first) && r.x_before_z_on_middle == x_before_z &&
                 r.y_before_z_on_bottom == y_before_z && r.sign_x == sx && r.sign_y == sy && r.sign_z == sz;
        });
        if (v >= 0) found.push_back(make(MoveFamily::R3, v, MoveDirection::slide, {x, y, z}));
      }
    }
  }
  std::sort(found.begin(), found.end());
  out.insert(out.end(), found.begin(), found.end());
}

void pr2_slides(const GaussDiagram& d, std::vector<MoveApplication>& out) {
  if (d.length() < 4) return;
  Cyclic w(d);
  std::vector<MoveApplication> found;
  for (int p : d.precrossing_chords()) {
    auto pt = d.tail_position(p), ph = d.head_position(p);
    for (std::size_t e1 : {w.prev(pt), w.next(pt)}) {
      int c = w.at(e1).chord;
      if (c == p || !d.kind(c).is_classical()) continue;
      std::size_t e2 = w.other(e1);
      bool p_first_h;
      if (e2 == w.next(ph)) p_first_h = true;
      else if (e2 == w.prev(ph)) p_first_h = false;
      else continue;
      bool p_first_t = e1 == w.next(pt);
      Role c_role = w.at(e1).role;
      int s = d.kind(c).sign();
      int v = find_variant(kPR2, [&](const auto& r) {
        return r.p_first_on_t == p_first_t && r.p_first_on_h == p_first_h && r.sign_c == s && r.c_role_on_t == c_role;
      });
      if (v >= 0) found.push_back(make(MoveFamily::PR2, v, MoveDirection::slide, {p, c}));
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  out.insert(out.end(), found.begin(), found.end());
}

void pr3_slides(const GaussDiagram& d, std::vector<MoveApplication>& out) {
  if (d.length() < 6) return;
  Cyclic w(d);
  std::vector<MoveApplication> found;
  for (std::size_t p = 0; p < w.n; ++p) {
    std::size_t q = w.next(p);
    const auto& ex = w.at(p);
    const auto& ey = w.at(q);
    if (ex.role != ey.role || ex.chord == ey.chord) continue;
    if (!w.kind_at(p).is_classical() || !w.kind_at(q).is_classical()) continue;
    bool over = ex.role == Role::tail;
    std::size_t ox = w.other(p), oy = w.other(q);
    for (std::size_t m : {w.prev(ox), w.next(ox)}) {
      const auto& ez = w.at(m);
      if (!d.kind(ez.chord).is_precrossing()) continue;
      bool x_before_z = m == w.next(ox);
      bool z_tail_on_a = ez.role == Role::tail;
      std::size_t oz = w.other(m);
      bool y_before_z;
      if (oz == w.next(oy)) y_before_z = true;
      else if (oy == w.next(oz)) y_before_z = false;
      else continue;
      int sx = d.kind(ex.chord).sign(), sy = d.kind(ey.chord).sign();
      int v = find_variant(kPR3, [&](const auto& r) {
        return r.over == over && r.x_before_z_on_a == x_before_z && r.y_before_z_on_b == y_before_z &&
               r.z_tail_on_a == z_tail_on_a && r.sign_x == sx && r.sign_y == sy;
      });
      if (v >= 0) found.push_back(make(MoveFamily::PR3, v, MoveDirection::slide, {ex.chord, ey.chord, ez.chord}));
    }
  }
  std::sort(found.begin(), found.end());
  out.insert(out.end(), found.begin(), found.end());
}

// ---- rewriting ---------------------------------------------------------

struct Block {
  std::size_t gap;
  std::vector<Endpoint> endpoints;
};

GaussDiagram insert_blocks(const GaussDiagram& d, const std::vector<Block>& blocks,
                           const std::vector<std::pair<int, ChordKind>>& new_chords) {
  std::vector<Endpoint> word;
  word.reserve(d.length() + 4);
  const std::size_t n = d.length();
  for (std::size_t g = 0; g <= n; ++g) {
    if (g < gap_count(d))
      for (const auto& b : blocks)
        if (b.gap == g) word.insert(word.end(), b.endpoints.begin(), b.endpoints.end());
    if (g < n) word.push_back(d.word()[g]);
  }
  auto chords = d.chords();
  for (const auto& [id, k] : new_chords) chords.emplace(id, k);
  return GaussDiagram(std::move(word), std::move(chords));
}

GaussDiagram remove_chords(const GaussDiagram& d, const std::vector<int>& ids) {
  std::vector<Endpoint> word;
  word.reserve(d.length());
  for (const auto& e : d.word())
    if (std::find(ids.begin(), ids.end(), e.chord) == ids.end()) word.push_back(e);
  auto chords = d.chords();
  for (int id : ids) chords.erase(id);
  return GaussDiagram(std::move(word), std::move(chords));
}

// Swap the contents of position pairs; optionally reverse some arrows.
GaussDiagram swap_segments(const GaussDiagram& d, const std::vector<std::pair<std::size_t, std::size_t>>& segments,
                           const std::vector<int>& reversed = {}) {
  auto word = d.word();
  for (auto [a, b] : segments) std::swap(word[a], word[b]);
  for (auto& e : word)
    if (std::find(reversed.begin(), reversed.end(), e.chord) != reversed.end()) e.role = opposite(e.role);
  return GaussDiagram(std::move(word), d.chords());
}

GaussDiagram apply_insert(const GaussDiagram& d, const MoveApplication& m) {
  const int a = d.max_chord_id() + 1;
  const int b = a + 1;
  const auto gap = static_cast<std::size_t>(m.site.at(0));
  switch (m.kind.family) {
    case MoveFamily::R1: {
      const auto& r = kR1.at(m.kind.variant);
      Endpoint first{a, r.first}, second{a, opposite(r.first)};
      return insert_blocks(d, {{gap, {first, second}}}, {{a, ChordKind::classical(r.sign)}});
    }
    case MoveFamily::PR1: {
      const auto& r = kPR1.at(m.kind.variant);
      Endpoint first{a, r.first}, second{a, opposite(r.first)};
      return insert_blocks(d, {{gap, {first, second}}}, {{a, ChordKind::precrossing()}});
    }
    case MoveFamily::R2: {
      const auto& r = kR2.at(m.kind.variant);
      const auto head_gap = static_cast<std::size_t>(m.site.at(1));
      const bool heads_first = m.site.at(2) != 0;
      Block tails{gap, {{a, Role::tail}, {b, Role::tail}}};
      Block heads{head_gap, r.antiparallel ? std::vector<Endpoint>{{b, Role::head}, {a, Role::head}}
                                           : std::vector<Endpoint>{{a, Role::head}, {b, Role::head}}};
      std::vector<Block> blocks = heads_first ? std::vector<Block>{heads, tails} : std::vector<Block>{tails, heads};
      return insert_blocks(d, blocks, {{a, ChordKind::classical(r.sign_a)}, {b, ChordKind::classical(-r.sign_a)}});
    }
    default:
      throw InapplicableMove("family has no insertion form");
  }
}

}  // namespace

std::string family_name(MoveFamily f) {
  switch (f) {
    case MoveFamily::R1: return "R1";
    case MoveFamily::R2: return "R2";
    case MoveFamily::R3: return "R3";
    case MoveFamily::PR1: return "PR1";
    case MoveFamily::PR2: return "PR2";
    case MoveFamily::PR3: return "PR3";
    case MoveFamily::CC: return "CC";
  }
  return "?";
}

std::vector<MoveApplication> applicable_moves(const GaussDiagram& d, unsigned set) {
  std::vector<MoveApplication> out;
  const bool ins = set & kInsertions, rem = set & kRemovals, sl = set & kSlides;
  if (ins) r1_insertions(d, out);
  if (rem) kink_removals(d, false, out);
  if (ins) r2_insertions(d, out);
  if (rem) r2_removals(d, out);
  if (sl) r3_slides(d, out);
  if (ins) pr1_insertions(d, out);
  if (rem) kink_removals(d, true, out);
  if (sl) pr2_slides(d, out);
  if (sl) pr3_slides(d, out);
  return out;
}

MoveApplication crossing_change_move(int chord) {
  return make(MoveFamily::CC, 0, MoveDirection::slide, {chord});
}

GaussDiagram apply_move_unchecked(const GaussDiagram& d, const MoveApplication& m) {
  if (m.direction == MoveDirection::insert) return apply_insert(d, m);
  if (m.direction == MoveDirection::remove) return remove_chords(d, m.site);
  const auto& s = m.site;
  switch (m.kind.family) {
    case MoveFamily::R3: {
      int x = s.at(0), y = s.at(1), z = s.at(2);
      return swap_segments(d, {{d.tail_position(x), d.tail_position(y)},
                               {d.head_position(x), d.tail_position(z)},
                               {d.head_position(y), d.head_position(z)}});
    }
    case MoveFamily::PR2: {
      const auto& r = kPR2.at(m.kind.variant);
      int p = s.at(0), c = s.at(1);
      return swap_segments(d, {{d.tail_position(p), d.position(c, r.c_role_on_t)},
                               {d.head_position(p), d.position(c, opposite(r.c_role_on_t))}},
                           {p, c});
    }
    case MoveFamily::PR3: {
      const auto& r = kPR3.at(m.kind.variant);
      int x = s.at(0), y = s.at(1), z = s.at(2);
      Role on_c = r.over ? Role::tail : Role::head;
      Role z_on_a = r.z_tail_on_a ? Role::tail : Role::head;
      return swap_segments(d, {{d.position(x, on_c), d.position(y, on_c)},
                               {d.position(x, opposite(on_c)), d.position(z, z_on_a)},
                               {d.position(y, opposite(on_c)), d.position(z, opposite(z_on_a))}});
    }
    case MoveFamily::CC:
      return crossing_change(d, s.at(0));
    default:
      throw InapplicableMove("family has no slide form");
  }
}

GaussDiagram apply_move(const GaussDiagram& d, const MoveApplication& m) {
  auto moves = applicable_moves(d);
  if (std::find(moves.begin(), moves.end(), m) == moves.end())
    throw InapplicableMove("move " + format_move(m) + " does not apply");
  return apply_move_unchecked(d, m);
}

std::vector<GaussDiagram> neighbors(const GaussDiagram& d) {
  std::vector<GaussDiagram> out;
  std::set<std::string> seen;
  for (const auto& m : applicable_moves(d)) {
    auto e = apply_move_unchecked(d, m);
    if (seen.insert(canonical_key(e)).second) out.push_back(std::move(e));
  }
  return out;
}

int chord_delta(const MoveApplication& m) {
  int k = m.kind.family == MoveFamily::R2 ? 2 : 1;
  switch (m.direction) {
    case MoveDirection::insert: return k;
    case MoveDirection::remove: return -k;
    case MoveDirection::slide: return 0;
  }
  return 0;
}

std::string format_move(const MoveApplication& m) {
  std::string out = family_name(m.kind.family) + "." + std::to_string(m.kind.variant) + " ";
  switch (m.direction) {
    case MoveDirection::insert: out += "Insert"; break;
    case MoveDirection::remove: out += "Delete"; break;
    case MoveDirection::slide: out += "Slide"; break;
  }
  out += " @ ";
  for (std::size_t i = 0; i < m.site.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m.site[i]);
  }
  return out;
}

}  // namespace pk
