#include "pseudoknot/homotopy.hpp"

#include "pseudoknot/determinant.hpp"
#include "pseudoknot/invariants.hpp"

namespace pk {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::trivial_by_path: return "trivial_by_path";
    case Verdict::nontrivial_by_i: return "nontrivial_by_I";
    case Verdict::nontrivial_by_ih: return "nontrivial_by_Ih";
    case Verdict::nontrivial_by_resolution_det: return "nontrivial_by_resolution_det";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

Certificate invariant_certificate(const GaussDiagram& d) {
  Certificate c;
  if (auto i = canonical_decorated(compute_I(d)); !i.empty()) {
    c.verdict = Verdict::nontrivial_by_i;
    c.invariant = i;
    return c;
  }
  if (auto ih = canonical_decorated(compute_Ih(d)); !ih.empty()) {
    c.verdict = Verdict::nontrivial_by_ih;
    c.invariant = ih;
    return c;
  }
  // Every resolution of a trivial pseudoknot is the unknot.
  if (d.empty() || !is_realizable(d)) return c;
  const auto pre = d.precrossing_chords();
  const std::size_t count = std::size_t{1} << pre.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<int> signs(pre.size());
    for (std::size_t j = 0; j < pre.size(); ++j) signs[j] = (mask >> (pre.size() - 1 - j)) & 1 ? -1 : 1;
    auto det = determinant(resolve_all(d, signs));
    if (det != 1) {
      c.verdict = Verdict::nontrivial_by_resolution_det;
      c.resolution_signs = std::move(signs);
      c.resolution_determinant = det;
      return c;
    }
  }
  return c;
}

Certificate nontrivial_certificate(const GaussDiagram& d, const SearchBudget& budget) {
  Certificate c = invariant_certificate(d);
  if (c.nontrivial()) return c;
  auto t = is_trivial_bounded(d, budget);
  if (t.trivial()) {
    c.verdict = Verdict::trivial_by_path;
    c.path = std::move(t.path);
  }
  return c;
}

HomotopyResult homotopy_equivalent_bounded(const GaussDiagram& a, const GaussDiagram& b, const SearchBudget& budget) {
  HomotopyResult r;
  r.ih_a = canonical_decorated(compute_Ih(a));
  r.ih_b = canonical_decorated(compute_Ih(b));
  if (budget.max_states == 0 || budget.max_chords < a.chord_count() || budget.max_chords < b.chord_count())
    throw BudgetInvalid("invalid search budget");
  if (r.obstructed()) return r;
  auto e = equivalent_bounded(a, b, budget, Relation::homotopy);
  r.path = std::move(e.path);
  r.stats = e.stats;
  return r;
}

}  // namespace pk
