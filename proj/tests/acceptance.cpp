// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pseudoknot/conway.hpp"
#include "pseudoknot/determinant.hpp"
#include "pseudoknot/errors.hpp"
#include "pseudoknot/homotopy.hpp"
#include "pseudoknot/invariants.hpp"
#include "pseudoknot/table.hpp"
#include "pseudoknot/unknotting.hpp"

using namespace pk;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fixture(const char* name) { return std::string(PK_FIXTURE_DIR) + "/" + name; }

std::string ih(const GaussDiagram& d) { return canonical_decorated(compute_Ih(d)); }
std::string iv(const GaussDiagram& d) { return canonical_decorated(compute_I(d)); }

unsigned inverse_set(const MoveApplication& m) {
  switch (m.direction) {
    case MoveDirection::insert: return kRemovals;
    case MoveDirection::remove: return kInsertions;
    case MoveDirection::slide: return kSlides;
  }
  return kAllMoves;
}

bool has_inverse(const GaussDiagram& d, const MoveApplication& m) {
  auto e = apply_move(d, m);
  auto key = canonical_key(d);
  for (const auto& m2 : applicable_moves(e, inverse_set(m)))
    if (canonical_key(apply_move_unchecked(e, m2)) == key) return true;
  return false;
}

template <class T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// 1. Invariance under random moves and, for Ih, crossing changes.
Outcome invariance() {
  Outcome o;
  std::mt19937 rng(2024);
  std::size_t moves = 0, changes = 0, stuck = 0;
  std::map<MoveFamily, std::size_t> by_family;
  // A diagram with no move inside the bounds is replaced by a fresh one.
  for (int n = 0; n < 1000 && o.pass;) {
    int chords = 1 + n % 8;
    auto d = oracle::random_diagram(rng, chords, std::min(3, int(rng() % 4)));
    auto i0 = iv(d), h0 = ih(d);
    int step = 0;
    for (; step < 20; ++step) {
      std::vector<MoveApplication> ok[3];
      for (const auto& m : applicable_moves(d)) {
        if (m.direction == MoveDirection::insert) {
          auto e = apply_move_unchecked(d, m);
          if (e.chord_count() > 8 || e.precrossing_count() > 3) continue;
        }
        ok[int(m.direction)].push_back(m);
      }
      std::vector<int> dirs;
      for (int k = 0; k < 3; ++k)
        if (!ok[k].empty()) dirs.push_back(k);
      if (dirs.empty()) break;
      const auto& m = pick(rng, ok[pick(rng, dirs)]);
      auto e = apply_move(d, m);
      ++moves;
      ++by_family[m.kind.family];
      if (iv(e) != i0 || ih(e) != h0) {
        o.fail("move " + format_move(m) + " on " + format_gauss_code(d));
        break;
      }
      auto cl = e.classical_chords();
      if (!cl.empty()) {
        auto c = crossing_change(e, pick(rng, cl));
        ++changes;
        if (ih(c) != h0) {
          o.fail("crossing change on " + format_gauss_code(e));
          break;
        }
      }
      d = e;
    }
    if (step == 20) ++n;
    else ++stuck;
  }
  std::ostringstream s;
  s << "1000 diagrams (" << stuck << " stuck ones replaced), " << moves << " moves, " << changes
    << " crossing changes;";
  for (auto [f, k] : by_family) s << ' ' << family_name(f) << '=' << k;
  if (o.pass) o.detail = s.str();
  return o;
}

// 2. Every Table 1 entry is homotopically trivial.
Outcome table_triviality() {
  Outcome o;
  auto rows = load_table(fixture("table1.tsv"));
  for (const auto& r : rows) {
    auto v = ih(conway_to_gauss(r.conway));
    if (!v.empty()) o.fail(r.name + " has Ih \"" + v + "\"");
  }
  if (o.pass) o.detail = std::to_string(rows.size()) + " entries, Ih empty";
  return o;
}

// 3. u_JB of the 3-, 4- and 5-crossing entries.
Outcome ujb_small() {
  Outcome o;
  const std::map<std::string, std::size_t> expected{{"3_1.3", 1}, {"4_1.3", 1}, {"4_1.5", 1}, {"5_1.5", 2},
                                                    {"5_2.4", 1}, {"5_2.6", 1}, {"5_2.9", 1}, {"5_2.11", 2}};
  std::size_t found = 0;
  for (const auto& r : load_table(fixture("table1.tsv"))) {
    auto it = expected.find(r.name);
    if (it == expected.end()) continue;
    ++found;
    if (r.expected_ujb() != it->second) o.fail(r.name + ": fixture disagrees");
    auto u = u_jb(conway_to_gauss(r.conway), 3);
    if (!u.exact() || u.upper != it->second)
      o.fail(r.name + ": got [" + std::to_string(u.lower) + ", " + std::to_string(u.upper) + "]");
  }
  if (found != expected.size()) o.fail("missing fixture rows");
  if (o.pass) o.detail = "8/8 exact";
  return o;
}

// 4. The Nakanishi-Bleiler pseudoknot.
Outcome nakanishi_bleiler() {
  Outcome o;
  const char* expr = "(i,1,1,1,1) 1 (1,1,1,1)";
  auto nb = conway_to_gauss(expr);
  auto pd = build_pseudodiagram(parse_conway(expr));

  auto u = u_jb(nb, 3);
  if (u.upper != 2 || u.witness.size() != 2) {
    o.fail("u_jb upper " + std::to_string(u.upper));
    return o;
  }
  int first = u.witness[0].chord;
  if (pd.vertices[std::size_t(first - 1)].term != 1) o.fail("first change is not the middle crossing");
  auto mid = u.witness[0].after();
  auto target = conway_to_gauss("(i,1,1) 1 (1,1)");
  if (!equivalent_bounded(mid, target, default_budget(mid, target)).equivalent())
    o.fail("intermediate diagram not equivalent to (i,1,1) 1 (1,1)");
  if (!u.witness[1].after().empty()) o.fail("second change does not unknot");

  auto f = unknotting_fixed(nb, 2, default_budget(nb));
  if (f.lower < 3) o.fail("fixed-diagram lower bound " + std::to_string(f.lower));
  auto cl = nb.classical_chords();
  std::size_t certified = 0, subsets = 0;
  auto check = [&](const std::vector<int>& s) {
    auto d = nb;
    for (int c : s) d = crossing_change(d, c);
    ++subsets;
    if (nontrivial_certificate(d, default_budget(d)).nontrivial()) ++certified;
  };
  check({});
  for (std::size_t a = 0; a < cl.size(); ++a) {
    check({cl[a]});
    for (std::size_t b = a + 1; b < cl.size(); ++b) check({cl[a], cl[b]});
  }
  if (cl.size() != 9 || subsets != 46 || certified != subsets)
    o.fail(std::to_string(certified) + "/" + std::to_string(subsets) + " subsets certified nontrivial");
  if (o.pass)
    o.detail = "u_jb upper 2 (changes " + std::to_string(first) + ", " + std::to_string(u.witness[1].chord) +
               "), lower " + std::to_string(u.lower) + "; fixed lower " + std::to_string(f.lower) + ", 46/46 subsets";
  return o;
}

// 5. Homotopy class representatives.
Outcome homotopy_classes(std::string& report) {
  Outcome o;
  std::set<std::string> values;
  for (const char* s : {"(i,i,i)", "(i,i,1)", "(i,i) (i,i)", "(i,i) (i,1)", "(i,i,i,i,i)"})
    values.insert(ih(conway_to_gauss(s)));
  if (values.size() != 5) o.fail(std::to_string(values.size()) + " distinct values among 5 representatives");
  auto rows = load_table(fixture("classes.tsv"));
  VerifyOptions v;
  v.compute_ujb = false;
  auto r = verify_table(rows, v);
  if (r.count(EntryStatus::error)) o.fail(std::to_string(r.count(EntryStatus::error)) + " rows failed");
  report = format_report(r);
  if (o.pass)
    o.detail = std::to_string(rows.size()) + " representatives, " + std::to_string(r.ih_partition.size()) +
               " Ih classes";
  return o;
}

// 6. Realizability against brute-force embedding.
Outcome realizability() {
  Outcome o;
  std::size_t words = 0;
  for (int n = 0; n <= 5; ++n)
    for (const auto& d : oracle::all_words(n)) {
      ++words;
      if (is_realizable(d) != oracle::embeds_in_plane(d)) o.fail("mismatch on " + format_gauss_code(d));
    }
  std::size_t built = 0;
  for (const char* f : {"table1.tsv", "classes.tsv"})
    for (const auto& r : load_table(fixture(f))) {
      ++built;
      if (!is_realizable(conway_to_gauss(r.conway))) o.fail(r.name + " not realizable");
    }
  if (o.pass) o.detail = std::to_string(words) + " words, " + std::to_string(built) + " built diagrams";
  return o;
}

// 7. Determinants.
Outcome determinants() {
  Outcome o;
  const std::vector<std::pair<const char*, std::uint64_t>> cases{{"(1,1,1)", 3}, {"2 2", 5}, {"5 1 4", 29}};
  for (auto [e, want] : cases) {
    auto got = determinant(conway_to_gauss(e));
    if (got != want) o.fail(std::string(e) + " -> " + std::to_string(got));
  }
  if (determinant(GaussDiagram()) != 1) o.fail("empty diagram");
  if (o.pass) o.detail = "3, 5, 29, 1";
  return o;
}

// 8. Round trips, canonical forms and move inverses.
Outcome round_trips() {
  Outcome o;
  std::size_t diagrams = 0, moves = 0;
  auto check = [&](const GaussDiagram& d, const std::vector<MoveApplication>& ms) {
    ++diagrams;
    if (!(parse_gauss_code(format_gauss_code(d)) == d)) o.fail("round trip " + format_gauss_code(d));
    auto c = canonical_form(d);
    if (!(canonical_form(c) == c) || canonical_code(c) != canonical_code(d)) o.fail("canonical " + format_gauss_code(d));
    for (const auto& m : ms) {
      ++moves;
      if (!has_inverse(d, m)) o.fail("no inverse for " + format_move(m) + " on " + format_gauss_code(d));
    }
  };
  for (int n = 0; n <= 3 && o.pass; ++n)
    for (const auto& d : oracle::all_diagrams(n)) check(d, applicable_moves(d));
  std::mt19937 rng(8);
  for (int i = 0; i < 400 && o.pass; ++i) {
    auto d = oracle::random_diagram(rng, 4 + i % 5, int(rng() % 4));
    auto all = applicable_moves(d);
    std::vector<MoveApplication> sample;
    for (const auto& m : all)
      if (m.direction != MoveDirection::insert) sample.push_back(m);
    for (int k = 0; k < 10 && !all.empty(); ++k) sample.push_back(pick(rng, all));
    check(d, sample);
  }
  if (o.pass) o.detail = std::to_string(diagrams) + " diagrams, " + std::to_string(moves) + " moves";
  return o;
}

// 9. Chord deletion reaches one fixed point in every order.
Outcome confluence() {
  Outcome o;
  std::mt19937 rng(9);
  std::size_t nontrivial = 0;
  for (int i = 0; i < 1000; ++i) {
    int chords = 3 + i % 6;
    auto d = oracle::random_diagram(rng, chords, 2 + int(rng() % std::min(chords - 1, 5)));
    auto z = prechord_diagram(d);
    for (const auto& c : {z, reduce_mod2(z)}) {
      auto all = oracle::all_deletion_results(c);
      auto one = canonical_decorated(delete_to_fixed_point(c));
      if (all.size() != 1 || *all.begin() != one) o.fail("not confluent: " + format_gauss_code(d));
      if (!one.empty()) ++nontrivial;
    }
  }
  if (o.pass) o.detail = "2000 prechord diagrams, " + std::to_string(nontrivial) + " with nonempty fixed point";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no time limit
    std::function<Outcome()> run;
  };
  std::string class_report;
  const std::vector<Criterion> criteria{
      {1, "invariance under moves", 300, invariance},
      {2, "Table 1 homotopically trivial", 60, table_triviality},
      {3, "u_JB of 3-5 crossing entries", 600, ujb_small},
      {4, "Nakanishi-Bleiler pseudoknot", 0, nakanishi_bleiler},
      {5, "homotopy class representatives", 0, [&] { return homotopy_classes(class_report); }},
      {6, "realizability oracle", 0, realizability},
      {7, "determinants", 0, determinants},
      {8, "round trips and inverses", 0, round_trips},
      {9, "deletion confluence", 0, confluence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.fail("took " + std::to_string(secs) + " s");
    if (!o.pass) ++failed;
    std::printf("[%s] C%d %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::cout << "\n" << class_report;
  return failed ? 1 : 0;
}
