#include "pseudoknot/unknotting.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "pseudoknot/invariants.hpp"

namespace pk {

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

UnknottingResult unknotting_fixed(const GaussDiagram& d, std::size_t k_max, const SearchBudget& budget) {
  UnknottingResult r;
  if (!compute_Ih(d).empty()) {
    r.lower = r.upper = kInfinity;
    return r;
  }
  const auto classical = d.classical_chords();
  bool lower_set = false;
  for (std::size_t k = 0; k <= std::min(k_max, classical.size()); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    bool all_nontrivial = true;
    do {
      GaussDiagram e = d;
      for (auto i : idx) e = crossing_change(e, classical[i]);
      SearchBudget b{std::max(budget.max_chords, e.chord_count()), budget.max_states};
      auto cert = nontrivial_certificate(e, b);
      if (cert.trivial()) {
        if (!lower_set) r.lower = k;
        r.upper = k;
        GaussDiagram cur = d;
        for (std::size_t j = 0; j < k; ++j) {
          UnknotStep s;
          s.before = cur;
          s.chord = classical[idx[j]];
          s.changed = crossing_change(cur, s.chord);
          s.simplification.start = s.changed;
          if (j + 1 == k) s.simplification = *cert.path;
          cur = s.changed;
          r.witness.push_back(std::move(s));
        }
        if (k == 0) r.witness.push_back({d, 0, d, *cert.path});
        return r;
      }
      if (!cert.nontrivial()) all_nontrivial = false;
    } while (k > 0 && next_combination(idx, classical.size()));
    if (!all_nontrivial && !lower_set) {
      r.lower = k;
      lower_set = true;
    }
  }
  if (!lower_set) r.lower = std::min(k_max, classical.size()) + 1;
  if (r.lower > classical.size()) r.lower = kInfinity;  // no subset unknots
  return r;
}

UnknottingResult u_jb(const GaussDiagram& d, std::size_t depth_max, const UnknotBudget& budget) {
  UnknottingResult r;
  if (!compute_Ih(d).empty()) {
    r.lower = r.upper = kInfinity;
    return r;
  }
  struct Node {
    GaussDiagram diagram;
    int parent;
    int chord;
    GaussDiagram changed;
    MovePath simplification;
  };
  std::vector<Node> nodes;
  auto witness = [&](int i) {
    std::vector<UnknotStep> steps;
    for (; nodes[static_cast<std::size_t>(i)].parent >= 0; i = nodes[static_cast<std::size_t>(i)].parent) {
      const auto& n = nodes[static_cast<std::size_t>(i)];
      steps.push_back({nodes[static_cast<std::size_t>(n.parent)].diagram, n.chord, n.changed, n.simplification});
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  };

  // Level 0 is the input itself.
  auto start = simplify_with_path(d, {d.chord_count() + budget.extra_chords, budget.max_states});
  if (start.diagram.empty()) {
    r.lower = r.upper = 0;
    r.witness.push_back({d, 0, d, start.path});
    return r;
  }
  bool lower_set = false;
  if (!invariant_certificate(d).nontrivial()) {
    r.lower = 0;
    lower_set = true;
  }
  nodes.push_back({d, -1, 0, d, MovePath{d, {}}});
  std::vector<int> level{0};
  std::unordered_map<std::string, SimplifyResult> memo;
  std::unordered_map<std::string, bool> seen{{canonical_key(d), true}};

  for (std::size_t depth = 1; depth <= depth_max && !level.empty(); ++depth) {
    std::vector<int> next;
    bool all_nontrivial = true;
    for (int parent : level) {
      const GaussDiagram cur = nodes[static_cast<std::size_t>(parent)].diagram;
      for (int c : cur.classical_chords()) {
        GaussDiagram changed = crossing_change(cur, c);
        const std::string key = canonical_key(changed);
        auto it = memo.find(key);
        if (it == memo.end()) {
          GaussDiagram canon = canonical_form(changed);
          SearchBudget b{canon.chord_count() + budget.extra_chords, budget.max_states};
          it = memo.emplace(key, simplify_with_path(canon, b)).first;
        }
        const MovePath& path = it->second.path;
        const GaussDiagram& simplified = it->second.diagram;
        nodes.push_back({simplified, parent, c, changed, path});
        const int id = static_cast<int>(nodes.size()) - 1;
        if (simplified.empty()) {
          r.upper = depth;
          if (!lower_set) r.lower = depth;
          r.witness = witness(id);
          return r;
        }
        if (!invariant_certificate(simplified).nontrivial()) all_nontrivial = false;
        if (seen.emplace(canonical_key(simplified), true).second) next.push_back(id);
      }
    }
    if (!all_nontrivial && !lower_set) {
      r.lower = depth;
      lower_set = true;
    }
    level = std::move(next);
  }
  if (!lower_set) r.lower = depth_max + 1;
  return r;
}

}  // namespace pk
