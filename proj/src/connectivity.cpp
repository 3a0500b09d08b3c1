#include "posetprune/connectivity.hpp"

#include <algorithm>

namespace posetprune {

SetFamily::SetFamily(ElementSet ground, std::vector<ElementSet> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  for (auto& m : members_) {
    if (m.empty()) throw PosetError(ErrorCode::empty_set, "family members must be nonempty");
    if (m.universe() != ground_.universe() || !m.is_subset_of(ground_))
      throw PosetError(ErrorCode::member_not_subset, "family member is not a subset of the ground set");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(const ElementSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool is_connectivity(const SetFamily& f) {
  if (f.members().empty()) return false;
  ElementSet covered(f.ground().universe());
  for (const auto& m : f.members()) covered |= m;
  if (covered != f.ground()) return false;
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (ms[i].intersects(ms[j]) && !f.contains(ms[i] | ms[j])) return false;
  return true;
}

bool is_point_connected(const SetFamily& f) {
  if (!is_connectivity(f))
    throw PosetError(ErrorCode::not_a_connectivity, "family is not a connectivity");
  bool ok = true;
  f.ground().for_each([&](Element p) {
    if (ok && !f.contains(ElementSet(f.ground().universe(), {p}))) ok = false;
  });
  return ok;
}

std::vector<ElementSet> components(const SetFamily& f) {
  if (!is_point_connected(f))
    throw PosetError(ErrorCode::not_a_connectivity, "family is not point-connected");
  std::vector<ElementSet> out;
  for (const auto& m : f.members()) {
    bool maximal = std::none_of(f.members().begin(), f.members().end(), [&](const ElementSet& other) {
      return other != m && m.is_subset_of(other);
    });
    if (maximal) out.push_back(m);
  }
  return out;
}

ElementSet component_of(const SetFamily& f, Element point) {
  ElementSet u(f.ground().universe());
  for (const auto& m : f.members())
    if (m.contains(point)) u |= m;
  return u;
}

}  // namespace posetprune
