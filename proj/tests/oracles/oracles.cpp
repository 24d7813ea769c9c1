#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>

namespace oracle {

using pk::ChordKind;
using pk::Endpoint;
using pk::GaussDiagram;
using pk::Role;

bool embeds_in_plane(const GaussDiagram& d) {
  const int n = static_cast<int>(d.chord_count());
  if (n == 0) return true;
  const int len = 2 * n;
  std::vector<int> vertex_of(static_cast<std::size_t>(len));
  std::map<int, int> index;
  for (int p = 0; p < len; ++p) {
    int c = d.word()[static_cast<std::size_t>(p)].chord;
    index.emplace(c, static_cast<int>(index.size()));
    vertex_of[static_cast<std::size_t>(p)] = index[c];
  }
  // Edge p runs from position p to p+1. Half-edge 2p starts it, 2p+1 ends it.
  std::vector<std::array<int, 4>> at(static_cast<std::size_t>(n));  // in1, out1, in2, out2
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < len; ++p) {
    int v = vertex_of[static_cast<std::size_t>(p)];
    int k = seen[static_cast<std::size_t>(v)]++;
    at[static_cast<std::size_t>(v)][static_cast<std::size_t>(2 * k)] = 2 * ((p + len - 1) % len) + 1;
    at[static_cast<std::size_t>(v)][static_cast<std::size_t>(2 * k + 1)] = 2 * p;
  }
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> rot(static_cast<std::size_t>(2 * len));
    for (int v = 0; v < n; ++v) {
      auto [in1, out1, in2, out2] = at[static_cast<std::size_t>(v)];
      std::array<int, 4> cyc = (mask >> v) & 1 ? std::array<int, 4>{in1, out2, out1, in2}
                                               : std::array<int, 4>{in1, in2, out1, out2};
      for (int i = 0; i < 4; ++i) rot[static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])] = cyc[static_cast<std::size_t>((i + 1) % 4)];
    }
    std::vector<char> done(static_cast<std::size_t>(2 * len), 0);
    int faces = 0;
    for (int h = 0; h < 2 * len; ++h) {
      if (done[static_cast<std::size_t>(h)]) continue;
      ++faces;
      for (int x = h; !done[static_cast<std::size_t>(x)]; x = rot[static_cast<std::size_t>(x ^ 1)]) done[static_cast<std::size_t>(x)] = 1;
    }
    if (faces == n + 2) return true;
  }
  return false;
}

bool evenness(const GaussDiagram& d) {
  for (const auto& [id, k] : d.chords()) {
    auto a = d.tail_position(id), b = d.head_position(id);
    auto gap = a < b ? b - a - 1 : a - b - 1;
    if (gap % 2) return false;
  }
  return true;
}

namespace {

void matchings(std::vector<int>& word, int next_id, std::vector<std::vector<int>>& out) {
  auto first = std::find(word.begin(), word.end(), 0);
  if (first == word.end()) {
    out.push_back(word);
    return;
  }
  *first = next_id;
  for (auto it = first + 1; it != word.end(); ++it) {
    if (*it) continue;
    *it = next_id;
    matchings(word, next_id + 1, out);
    *it = 0;
  }
  *first = 0;
}

GaussDiagram from_word(const std::vector<int>& word, unsigned flip_mask, const std::vector<ChordKind>& kinds) {
  std::vector<Endpoint> w;
  std::set<int> seen;
  for (int c : word) {
    bool first = seen.insert(c).second;
    bool tail = first != static_cast<bool>((flip_mask >> (c - 1)) & 1u);
    w.push_back({c, tail ? Role::tail : Role::head});
  }
  std::map<int, ChordKind> chords;
  for (std::size_t i = 0; i < kinds.size(); ++i) chords.emplace(static_cast<int>(i) + 1, kinds[i]);
  return GaussDiagram(std::move(w), std::move(chords));
}

}  // namespace

std::vector<GaussDiagram> all_words(int n) {
  std::vector<int> word(static_cast<std::size_t>(2 * n), 0);
  std::vector<std::vector<int>> ms;
  matchings(word, 1, ms);
  std::vector<GaussDiagram> out;
  std::vector<ChordKind> kinds(static_cast<std::size_t>(n), ChordKind::classical(1));
  for (const auto& m : ms) out.push_back(from_word(m, 0, kinds));
  return out;
}

std::vector<GaussDiagram> all_diagrams(int n) {
  std::vector<int> word(static_cast<std::size_t>(2 * n), 0);
  std::vector<std::vector<int>> ms;
  matchings(word, 1, ms);
  int kind_count = 1;
  for (int i = 0; i < n; ++i) kind_count *= 3;
  std::vector<GaussDiagram> out;
  for (const auto& m : ms)
    for (unsigned flips = 0; flips < (1u << n); ++flips)
      for (int k = 0; k < kind_count; ++k) {
        std::vector<ChordKind> kinds;
        for (int i = 0, r = k; i < n; ++i, r /= 3)
          kinds.push_back(r % 3 == 0 ? ChordKind::classical(1) : r % 3 == 1 ? ChordKind::classical(-1) : ChordKind::precrossing());
        out.push_back(from_word(m, flips, kinds));
      }
  return out;
}

GaussDiagram random_diagram(std::mt19937& rng, int chords, int precrossings) {
  std::vector<int> word;
  for (int c = 1; c <= chords; ++c) word.insert(word.end(), {c, c});
  std::shuffle(word.begin(), word.end(), rng);
  std::vector<int> ids(static_cast<std::size_t>(chords));
  std::iota(ids.begin(), ids.end(), 1);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<ChordKind> kinds(static_cast<std::size_t>(chords), ChordKind::classical(1));
  for (int i = 0; i < chords; ++i) {
    bool pre = i < precrossings;
    kinds[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)] - 1)] =
        pre ? ChordKind::precrossing() : ChordKind::classical(rng() % 2 ? 1 : -1);
  }
  unsigned flips = chords ? static_cast<unsigned>(rng()) & ((1u << chords) - 1) : 0;
  return from_word(word, flips, kinds);
}

std::map<int, int> writhe_polynomial(const GaussDiagram& d) {
  std::map<int, int> w;
  const std::size_t n = d.length();
  for (int c : d.classical_chords()) {
    // Signed count of arrows crossing c, each weighted by whether its tail or
    // head lies on the arc from c's tail to c's head.
    int index = 0;
    for (std::size_t k = (d.tail_position(c) + 1) % n; k != d.head_position(c); k = (k + 1) % n) {
      const auto& e = d.word()[k];
      if (!d.kind(e.chord).is_classical()) continue;
      int s = d.kind(e.chord).sign();
      index += e.role == Role::tail ? s : -s;
    }
    if (index != 0) w[index] += d.kind(c).sign();
  }
  std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
  return w;
}

namespace {

struct Line {
  double nx, ny, c;  // points with nx*x + ny*y = c
  double dx, dy;     // direction of travel
};

std::array<double, 2> meet(const Line& a, const Line& b) {
  double det = a.nx * b.ny - a.ny * b.nx;
  return {(a.c * b.ny - a.ny * b.c) / det, (a.nx * b.c - a.c * b.nx) / det};
}

double along(const Line& l, const std::array<double, 2>& p) { return l.dx * p[0] + l.dy * p[1]; }

int crossing_sign(const Line& over, const Line& under) {
  return over.dx * under.dy - over.dy * under.dx > 0 ? 1 : -1;
}

// Three lines at 0, 60 and 120 degrees; lines 0 and 1 meet at the origin and
// line 2 is offset by `offset`. `orient` picks the travel directions.
std::array<Line, 3> lines(unsigned orient, double offset) {
  std::array<Line, 3> out{};
  for (int i = 0; i < 3; ++i) {
    double a = M_PI / 3 * i;
    double s = (orient >> i) & 1u ? -1.0 : 1.0;
    out[static_cast<std::size_t>(i)] = {std::cos(a), std::sin(a), i == 2 ? offset : 0.0, -std::sin(a) * s, std::cos(a) * s};
  }
  return out;
}

}  // namespace

std::set<std::pair<Row, Row>> geometric_r3() {
  std::set<std::pair<Row, Row>> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (unsigned orient = 0; orient < 8; ++orient) {
      auto row = [&](double offset) {
        auto l = lines(orient, offset);
        const Line& top = l[static_cast<std::size_t>(perm[0])];
        const Line& mid = l[static_cast<std::size_t>(perm[1])];
        const Line& bot = l[static_cast<std::size_t>(perm[2])];
        auto x = meet(top, mid), y = meet(top, bot), z = meet(mid, bot);
        return Row{along(top, x) < along(top, y), along(mid, x) < along(mid, z), along(bot, y) < along(bot, z),
                   crossing_sign(top, mid), crossing_sign(top, bot), crossing_sign(mid, bot)};
      };
      out.insert({row(1.0), row(-1.0)});
      out.insert({row(-1.0), row(1.0)});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::set<std::pair<Row6, Row6>> geometric_pr3() {
  std::set<std::pair<Row6, Row6>> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (unsigned orient = 0; orient < 8; ++orient)
      for (bool over : {true, false}) {
        auto row = [&](double offset) {
          auto l = lines(orient, offset);
          const Line& c = l[static_cast<std::size_t>(perm[0])];
          const Line* a = &l[static_cast<std::size_t>(perm[1])];
          const Line* b = &l[static_cast<std::size_t>(perm[2])];
          if (along(c, meet(c, *b)) < along(c, meet(c, *a))) std::swap(a, b);
          auto x = meet(c, *a), y = meet(c, *b), z = meet(*a, *b);
          int sx = over ? crossing_sign(c, *a) : crossing_sign(*a, c);
          int sy = over ? crossing_sign(c, *b) : crossing_sign(*b, c);
          return Row6{over, along(*a, x) < along(*a, z), along(*b, y) < along(*b, z), crossing_sign(*a, *b) > 0, sx, sy};
        };
        out.insert({row(1.0), row(-1.0)});
        out.insert({row(-1.0), row(1.0)});
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

std::int64_t det_abs(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  double det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i][k]) > std::abs(m[piv][k])) piv = i;
    if (std::abs(m[piv][k]) < 1e-9) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return std::llround(std::abs(det));
}

}  // namespace

std::uint64_t goeritz_determinant(const pk::PlanarPseudodiagram& p) {
  const std::size_t v = p.vertex_count();
  if (v == 0) return 1;
  // Corner (v, s) lies between slots s and s+1. Walking the face: leave
  // through slot s+1, arrive at (w, t), continue from corner (w, t).
  std::vector<int> face(4 * v, -1);
  int faces = 0;
  for (std::size_t c = 0; c < 4 * v; ++c) {
    if (face[c] >= 0) continue;
    for (std::size_t k = c; face[k] < 0;) {
      face[k] = faces;
      std::size_t vert = k / 4, s = k % 4;
      k = static_cast<std::size_t>(p.link[4 * vert + (s + 1) % 4]);
    }
    ++faces;
  }
  // Checkerboard: corners (v, s) and (v, s+1) get opposite colours.
  std::vector<int> colour(static_cast<std::size_t>(faces), -1);
  colour[static_cast<std::size_t>(face[0])] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t c = 0; c < 4 * v; ++c) {
      int f = face[c], g = face[c - c % 4 + (c % 4 + 1) % 4];
      if (colour[static_cast<std::size_t>(f)] >= 0 && colour[static_cast<std::size_t>(g)] < 0) {
        colour[static_cast<std::size_t>(g)] = 1 - colour[static_cast<std::size_t>(f)];
        changed = true;
      }
    }
  }
  std::vector<int> white;
  for (int f = 0; f < faces; ++f)
    if (colour[static_cast<std::size_t>(f)] == 0) white.push_back(f);
  std::map<int, std::size_t> slot;
  for (std::size_t i = 0; i < white.size(); ++i) slot[white[i]] = i;
  std::vector<std::vector<double>> g(white.size(), std::vector<double>(white.size(), 0));
  for (std::size_t vert = 0; vert < v; ++vert) {
    int w = colour[static_cast<std::size_t>(face[4 * vert])] == 0 ? 0 : 1;
    int f1 = face[4 * vert + static_cast<std::size_t>(w)], f2 = face[4 * vert + static_cast<std::size_t>(w) + 2];
    if (f1 == f2) continue;
    double eta = w == p.vertices[vert].over_strand ? 1 : -1;
    auto i = slot[f1], j = slot[f2];
    g[i][j] -= eta;
    g[j][i] -= eta;
    g[i][i] += eta;
    g[j][j] += eta;
  }
  g.pop_back();
  for (auto& r : g) r.pop_back();
  return static_cast<std::uint64_t>(det_abs(std::move(g)));
}

std::uint64_t continued_fraction_numerator(const pk::ConwayExpr& e) {
  // p/q as a projective pair; a term a maps p/q to a + q/p.
  std::int64_t p = 1, q = 0;
  for (const auto& term : e.terms) {
    std::int64_t a = 0;
    for (auto x : term) a += x == pk::ConwayEntry::positive ? 1 : -1;
    std::int64_t np = a * p + q;
    q = p;
    p = np;
  }
  return static_cast<std::uint64_t>(p < 0 ? -p : p);
}

std::set<std::string> all_deletion_results(const pk::DecoratedChordDiagram& c) {
  std::set<std::string> out;
  std::set<std::string> visited;
  std::function<void(const pk::DecoratedChordDiagram&)> walk = [&](const pk::DecoratedChordDiagram& x) {
    std::string key;
    for (int id : x.word) key += std::to_string(id) + ",";
    if (!visited.insert(key).second) return;
    auto del = pk::deletable_chords(x);
    if (del.empty()) {
      out.insert(pk::canonical_decorated(x));
      return;
    }
    for (int id : del) walk(pk::delete_chord(x, id));
  };
  walk(c);
  return out;
}

}  // namespace oracle
