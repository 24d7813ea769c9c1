#include "pseudoknot/search.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace pk {

namespace {

struct State {
  std::string key;
  int parent;  // -1 for the root
  MoveApplication move;
  std::size_t chords;
  bool realizable;
};

class StateTable {
 public:
  int find(const std::string& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
  }
  int add(State s) {
    int id = static_cast<int>(states_.size());
    index_.emplace(s.key, id);
    states_.push_back(std::move(s));
    return id;
  }
  const State& operator[](int i) const { return states_[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return states_.size(); }

  // Moves leading from the root to state i.
  std::vector<MoveApplication> moves_to(int i) const {
    std::vector<MoveApplication> out;
    for (; states_[static_cast<std::size_t>(i)].parent >= 0; i = states_[static_cast<std::size_t>(i)].parent)
      out.push_back(states_[static_cast<std::size_t>(i)].move);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<State> states_;
  std::unordered_map<std::string, int> index_;
};

std::vector<MoveApplication> search_moves(const GaussDiagram& d, unsigned set, Relation relation) {
  auto out = applicable_moves(d, set);
  if (relation == Relation::homotopy && (set & kSlides))
    for (int c : d.classical_chords()) out.push_back(crossing_change_move(c));
  return out;
}

void check_budget(const SearchBudget& b, const GaussDiagram& x, const GaussDiagram& y) {
  if (b.max_states == 0) throw BudgetInvalid("max_states must be positive");
  if (b.max_chords < x.chord_count() || b.max_chords < y.chord_count())
    throw BudgetInvalid("max_chords is below the chord count of an input");
}

}  // namespace

SearchBudget default_budget(const GaussDiagram& d) { return {d.chord_count() + 2, 100000}; }

SearchBudget default_budget(const GaussDiagram& a, const GaussDiagram& b) {
  return {std::max(a.chord_count(), b.chord_count()) + 2, 100000};
}

GaussDiagram MovePath::end() const {
  GaussDiagram d = start;
  for (const auto& m : moves) d = apply_move_unchecked(d, m);
  return d;
}

std::string MovePath::trace() const {
  std::string out;
  for (const auto& m : moves) out += format_move(m) + "\n";
  return out;
}

EquivalenceResult equivalent_bounded(const GaussDiagram& a, const GaussDiagram& b, const SearchBudget& budget,
                                     Relation relation) {
  check_budget(budget, a, b);
  EquivalenceResult result;
  StateTable side[2];
  std::vector<std::pair<int, GaussDiagram>> frontier[2];
  const GaussDiagram* roots[2] = {&a, &b};
  for (int s = 0; s < 2; ++s) {
    int id = side[s].add({canonical_key(*roots[s]), -1, {}, roots[s]->chord_count(), false});
    frontier[s].emplace_back(id, *roots[s]);
  }
  if (side[0][0].key == side[1][0].key) {
    result.path = MovePath{a, {}};
    result.stats.states_visited = 1;
    return result;
  }

  int meet_fwd = -1, meet_bwd = -1;
  auto visited = [&] { return side[0].size() + side[1].size(); };
  while (meet_fwd < 0 && !frontier[0].empty() && !frontier[1].empty() && !result.stats.exhausted) {
    const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    auto& table = side[s];
    std::sort(frontier[s].begin(), frontier[s].end(),
              [&](const auto& x, const auto& y) { return table[x.first].key < table[y.first].key; });
    std::vector<std::pair<int, GaussDiagram>> next;
    for (const auto& [id, d] : frontier[s]) {
      for (const auto& m : search_moves(d, kAllMoves, relation)) {
        if (chord_delta(m) > 0 && d.chord_count() + static_cast<std::size_t>(chord_delta(m)) > budget.max_chords)
          continue;
        GaussDiagram e = apply_move_unchecked(d, m);
        std::string key = canonical_key(e);
        if (table.find(key) >= 0) continue;
        if (visited() >= budget.max_states) {
          result.stats.exhausted = true;
          break;
        }
        int child = table.add({key, id, m, e.chord_count(), false});
        int other = side[1 - s].find(key);
        if (other >= 0) {
          meet_fwd = s == 0 ? child : other;
          meet_bwd = s == 0 ? other : child;
          break;
        }
        next.emplace_back(child, std::move(e));
      }
      if (meet_fwd >= 0 || result.stats.exhausted) break;
    }
    frontier[s] = std::move(next);
  }
  result.stats.states_visited = visited();
  if (meet_fwd < 0) return result;

  MovePath path{a, side[0].moves_to(meet_fwd)};
  GaussDiagram cur = path.end();
  // Walk b's tree back to its root, inverting each move on the current
  // representative (which agrees with the tree's state only up to rotation
  // and relabeling).
  for (int i = meet_bwd; side[1][i].parent >= 0; i = side[1][i].parent) {
    const std::string& target = side[1][side[1][i].parent].key;
    bool found = false;
    for (const auto& m : search_moves(cur, kAllMoves, relation)) {
      GaussDiagram e = apply_move_unchecked(cur, m);
      if (canonical_key(e) == target) {
        path.moves.push_back(m);
        cur = std::move(e);
        found = true;
        break;
      }
    }
    if (!found) throw Error("internal error: move without inverse");
  }
  result.path = std::move(path);
  return result;
}

SimplifyResult simplify_with_path(const GaussDiagram& d, const SearchBudget& budget, Relation relation) {
  if (budget.max_states == 0) throw BudgetInvalid("max_states must be positive");
  const std::size_t max_chords = std::max(budget.max_chords, d.chord_count());
  const bool want_realizable = is_realizable(d);

  struct Item {
    std::size_t chords;
    bool insertions;
    std::string key;
    int id;
    GaussDiagram diagram;
  };
  auto later = [](const Item& x, const Item& y) {
    if (x.chords != y.chords) return x.chords > y.chords;
    if (x.insertions != y.insertions) return x.insertions;
    return x.key > y.key;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);

  StateTable table;
  SearchStats stats;
  int root = table.add({canonical_key(d), -1, {}, d.chord_count(), want_realizable});
  queue.push({d.chord_count(), false, table[root].key, root, d});
  int best = root;
  auto better = [&](int x, int y) {
    const auto& sx = table[x];
    const auto& sy = table[y];
    if (want_realizable && sx.realizable != sy.realizable) return sx.realizable;
    if (sx.chords != sy.chords) return sx.chords < sy.chords;
    return sx.key < sy.key;
  };

  while (!queue.empty() && table[best].chords > 0 && !stats.exhausted) {
    Item item = queue.top();
    queue.pop();
    const unsigned set = item.insertions ? kInsertions : (kRemovals | kSlides);
    if (!item.insertions) queue.push({item.chords, true, item.key, item.id, item.diagram});
    for (const auto& m : search_moves(item.diagram, set, relation)) {
      if (chord_delta(m) > 0 && item.chords + static_cast<std::size_t>(chord_delta(m)) > max_chords) continue;
      GaussDiagram e = apply_move_unchecked(item.diagram, m);
      std::string key = canonical_key(e);
      if (table.find(key) >= 0) continue;
      if (table.size() >= budget.max_states) {
        stats.exhausted = true;
        break;
      }
      bool realizable = want_realizable && is_realizable(e);
      int id = table.add({key, item.id, m, e.chord_count(), realizable});
      if (better(id, best)) best = id;
      if (e.empty()) break;
      queue.push({e.chord_count(), false, std::move(key), id, std::move(e)});
    }
  }
  stats.states_visited = table.size();
  MovePath path{d, table.moves_to(best)};
  GaussDiagram out = path.end();
  return {std::move(out), std::move(path), stats};
}

GaussDiagram simplify_bounded(const GaussDiagram& d, std::size_t max_chords, std::size_t max_states) {
  return simplify_with_path(d, {max_chords, max_states}).diagram;
}

TrivialityResult is_trivial_bounded(const GaussDiagram& d, const SearchBudget& budget) {
  auto s = simplify_with_path(d, budget);
  TrivialityResult out;
  out.stats = s.stats;
  if (s.diagram.empty()) out.path = std::move(s.path);
  return out;
}

}  // namespace pk
