#pragma once

#include <vector>

#include "posetprune/element_set.hpp"
#include "posetprune/error.hpp"

namespace posetprune {

/// Finite family of nonempty subsets of a ground set, stored canonically
/// (sorted, duplicates removed) so membership tests are exact.
class SetFamily {
 public:
  /// Throws PosetError{member_not_subset} when a member leaves `ground`, and
  /// PosetError{empty_set} for an empty member.
  SetFamily(ElementSet ground, std::vector<ElementSet> members);

  const ElementSet& ground() const noexcept { return ground_; }
  const std::vector<ElementSet>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const ElementSet& s) const;

 private:
  ElementSet ground_;
  std::vector<ElementSet> members_;
};

/// Nonempty, covers the ground set, and closed under unions of intersecting
/// pairs. For a finite family the pairwise rule is equivalent to closure under
/// unions of every subfamily with a common point: fold the subfamily one
/// member at a time, each partial union still holds that point.
bool is_connectivity(const SetFamily& f);

/// Every singleton of the ground set is a member. Throws
/// PosetError{not_a_connectivity} when `f` fails is_connectivity.
bool is_point_connected(const SetFamily& f);

/// Inclusion-maximal members, canonically ordered. Requires a point-connected
/// connectivity (PosetError{not_a_connectivity} otherwise).
std::vector<ElementSet> components(const SetFamily& f);

/// Union of every member containing `point`.
ElementSet component_of(const SetFamily& f, Element point);

}  // namespace posetprune
