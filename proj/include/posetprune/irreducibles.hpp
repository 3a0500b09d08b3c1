#pragma once

#include <vector>

#include "posetprune/poset.hpp"
#include "posetprune/veins.hpp"

namespace posetprune {

struct IrreducibilityProfile {
  Element element;
  bool irreducible = false;
  bool coirreducible = false;
  bool doubly = false;

  bool operator==(const IrreducibilityProfile&) const = default;
};

/// Maximal, or the strict up-set is a filter.
bool is_irreducible(const Poset& p, Element x);

/// x = a ∧ b forces x ∈ {a, b}. Only meaningful on conditionally complete
/// posets; PosetError{not_conditionally_complete} otherwise.
bool is_irreducible_via_meet(const Poset& p, Element x);

/// Irreducible in the opposite poset.
bool is_coirreducible(const Poset& p, Element x);

ElementSet irreducibles(const Poset& p);
ElementSet coirreducibles(const Poset& p);
ElementSet doubly_irreducibles(const Poset& p);

std::vector<IrreducibilityProfile> profiles(const Poset& p);

struct PreservationReport {
  bool hypothesis_met = false;  ///< original poset is conditionally complete
  std::vector<IrreducibilityProfile> original;
  std::vector<IrreducibilityProfile> pruned;
  /// Irreducible and coirreducible sets coincide before and after pruning.
  bool preserved = false;
};

/// Profiles of p and p*. With `require_hypothesis` (the default) a poset that
/// is not conditionally complete raises PosetError{not_conditionally_complete};
/// otherwise the report is still produced, flagged with hypothesis_met = false.
PreservationReport preservation_report(const Poset& p, Mode mode = Mode::fast,
                                       bool require_hypothesis = true);

}  // namespace posetprune
