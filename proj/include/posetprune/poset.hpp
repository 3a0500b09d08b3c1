#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <memory>
#include <utility>
#include <vector>

#include "posetprune/element_set.hpp"
#include "posetprune/error.hpp"

namespace posetprune {

/// Ascending sequence of pairwise comparable elements.
using Chain = std::vector<Element>;

using LabelPair = std::pair<std::string, std::string>;
using ElementPair = std::pair<Element, Element>;

/// Immutable finite poset.
///
/// Elements are addressed by index; indices are assigned in lexicographic
/// label order. The strict order is stored as per-element up/down bitsets
/// (the reachability closure) alongside the cover relation (its transitive
/// reduction). All queries are const and safe to call concurrently; copies
/// share storage.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from labels and arbitrary strict relations (covers or
  /// not). Throws PosetError{duplicate_label | unknown_label} or CycleError.
  static Poset from_relations(std::vector<std::string> labels,
                              const std::vector<LabelPair>& pairs);

  /// Same, with relations given as indices into `labels` (any label order).
  static Poset from_indexed(std::vector<std::string> labels,
                            const std::vector<ElementPair>& pairs);

  std::size_t size() const noexcept { return rep_->labels.size(); }
  bool empty() const noexcept { return rep_->labels.empty(); }

  const std::vector<std::string>& labels() const noexcept { return rep_->labels; }
  const std::string& label(Element e) const { return rep_->labels.at(e); }
  std::optional<Element> find(std::string_view label) const;
  /// Throws PosetError{unknown_label}.
  Element at(std::string_view label) const;
  ElementSet set_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const std::vector<Element>& elems) const;
  std::vector<std::string> labels_of(const ElementSet& s) const {
    return labels_of(s.elements());
  }

  bool less(Element x, Element y) const { return rep_->up[x].contains(y); }
  bool leq(Element x, Element y) const { return x == y || less(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
  bool covers(Element x, Element y) const;  ///< y covers x

  /// Strict upper / lower sets.
  const ElementSet& strict_up(Element x) const { return rep_->up[x]; }
  const ElementSet& strict_down(Element x) const { return rep_->down[x]; }
  ElementSet up(Element x) const;
  ElementSet down(Element x) const;

  const std::vector<Element>& upper_covers(Element x) const { return rep_->upper_covers[x]; }
  const std::vector<Element>& lower_covers(Element x) const { return rep_->lower_covers[x]; }

  /// Cover pairs (x, y), y covering x, sorted.
  std::vector<ElementPair> cover_pairs() const;
  /// All pairs x < y, sorted.
  std::vector<ElementPair> relations() const;
  std::size_t relation_count() const;

  bool is_minimal(Element x) const { return rep_->down[x].empty(); }
  bool is_maximal(Element x) const { return rep_->up[x].empty(); }
  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;

  /// Length of the longest chain ending at each element, minus one.
  std::vector<std::size_t> heights() const;

  /// {z : x <= z <= y}, empty when x is not below y.
  ElementSet interval(Element x, Element y) const;

  /// Throws PosetError{empty_set} on the empty set.
  bool is_chain(const ElementSet& s) const;
  bool is_convex(const ElementSet& s) const;
  /// Consecutive members (in order) are cover pairs. Requires a chain.
  bool is_saturated_chain(const ElementSet& s) const;
  /// Sorts a chain's members ascending. Requires is_chain(s).
  Chain as_chain(const ElementSet& s) const;

  /// Every inclusion-maximal chain, as saturated paths from a minimal to a
  /// maximal element, in lexicographic order. The number of such chains is
  /// exponential in the worst case (a product of k two-element antichains
  /// stacked has 2^k), so this is meant for small posets and oracles.
  std::vector<Chain> maximal_chains() const;

  /// Maximal chains of the subposet [x, y]: saturated paths x -> y.
  /// Throws PosetError{not_comparable} unless x <= y.
  std::vector<Chain> maximal_chains_in_interval(Element x, Element y) const;

  /// Subposet on `q` with the restricted order; throws on the empty set.
  Poset induced_subposet(const ElementSet& q) const;

  Poset opposite() const;

  std::optional<Element> meet(Element a, Element b) const;
  std::optional<Element> join(Element a, Element b) const;

  /// Pairs with a common lower bound have a meet, and pairs with a common
  /// upper bound have a join.
  bool is_conditionally_complete() const;

  /// Up-closed and down-directed within itself; the empty set qualifies.
  bool is_filtered_upset(const ElementSet& s) const;

  ElementSet all() const { return ElementSet::full(size()); }

  /// Same labels and same order.
  bool operator==(const Poset& other) const {
    return rep_ == other.rep_ || (rep_->labels == other.rep_->labels && rep_->up == other.rep_->up);
  }

 private:
  static Poset build(std::vector<std::string> sorted_labels,
                     std::vector<ElementSet> successors);
  void check_element(Element e) const;

  struct Rep {
    std::vector<std::string> labels;
    std::vector<ElementSet> up;
    std::vector<ElementSet> down;
    std::vector<std::vector<Element>> upper_covers;
    std::vector<std::vector<Element>> lower_covers;
  };
  static std::shared_ptr<const Rep> empty_rep();

  std::shared_ptr<const Rep> rep_ = empty_rep();
};

}  // namespace posetprune
