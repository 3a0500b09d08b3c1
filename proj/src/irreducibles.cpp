#include "posetprune/irreducibles.hpp"

#include "posetprune/pruning.hpp"

namespace posetprune {

bool is_irreducible(const Poset& p, Element x) {
  if (x >= p.size()) throw PosetError(ErrorCode::unknown_label, "element index out of range");
  return p.is_maximal(x) || p.is_filtered_upset(p.strict_up(x));
}

bool is_irreducible_via_meet(const Poset& p, Element x) {
  if (x >= p.size()) throw PosetError(ErrorCode::unknown_label, "element index out of range");
  if (!p.is_conditionally_complete())
    throw PosetError(ErrorCode::not_conditionally_complete, "poset is not conditionally complete");
  const auto above = p.strict_up(x).elements();
  for (std::size_t i = 0; i < above.size(); ++i)
    for (std::size_t j = i + 1; j < above.size(); ++j)
      if (p.meet(above[i], above[j]) == x) return false;
  return true;
}

bool is_coirreducible(const Poset& p, Element x) {
  return is_irreducible(p.opposite(), x);
}

ElementSet irreducibles(const Poset& p) {
  ElementSet s(p.size());
  for (Element x = 0; x < p.size(); ++x)
    if (is_irreducible(p, x)) s.insert(x);
  return s;
}

ElementSet coirreducibles(const Poset& p) {
  return irreducibles(p.opposite());
}

ElementSet doubly_irreducibles(const Poset& p) {
  return irreducibles(p) & coirreducibles(p);
}

std::vector<IrreducibilityProfile> profiles(const Poset& p) {
  const auto irr = irreducibles(p);
  const auto co = coirreducibles(p);
  std::vector<IrreducibilityProfile> out;
  for (Element x = 0; x < p.size(); ++x) {
    bool i = irr.contains(x);
    bool c = co.contains(x);
    out.push_back({x, i, c, i && c});
  }
  return out;
}

PreservationReport preservation_report(const Poset& p, Mode mode, bool require_hypothesis) {
  PreservationReport report;
  report.hypothesis_met = p.is_conditionally_complete();
  if (require_hypothesis && !report.hypothesis_met)
    throw PosetError(ErrorCode::not_conditionally_complete, "poset is not conditionally complete");
  const Poset pruned = pruned_poset(p, mode);
  report.original = profiles(p);
  report.pruned = profiles(pruned);
  report.preserved = true;
  for (std::size_t i = 0; i < report.original.size(); ++i) {
    if (report.original[i].irreducible != report.pruned[i].irreducible ||
        report.original[i].coirreducible != report.pruned[i].coirreducible)
      report.preserved = false;
  }
  return report;
}

}  // namespace posetprune
