#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "posetprune/poset.hpp"
#include "posetprune/veins.hpp"

namespace posetprune {

inline constexpr std::size_t default_max_prune_iterations = 4;

/// A maximal chain of [x, y] that contains no strict vein of the ambient
/// poset; its existence is what makes x <* y.
struct PruneWitness {
  Element x;
  Element y;
  Chain chain;
};

/// The pruning order x <=* y of a fixed poset, computed for all pairs on
/// construction.
///
/// Oracle mode enumerates the maximal chains of [x, y] and tests each one for
/// a strict vein (as a subset). Fast mode uses the fact that a saturated
/// chain contains a strict vein exactly when two consecutive members form a
/// bridge edge, so x <* y iff y is reachable from x in the cover digraph with
/// bridge edges removed.
class PruningOrder {
 public:
  explicit PruningOrder(Poset p, Mode mode = Mode::fast);

  const Poset& poset() const noexcept { return poset_; }
  Mode mode() const noexcept { return mode_; }

  bool leq(Element x, Element y) const { return x == y || less_[x].contains(y); }
  bool less(Element x, Element y) const { return less_[x].contains(y); }
  const ElementSet& strict_up(Element x) const { return less_[x]; }

  /// Present iff x <* y with x != y.
  std::optional<PruneWitness> witness(Element x, Element y) const;

  /// True when the chain (ascending, saturated) holds no strict vein.
  bool avoids_strict_veins(const Chain& chain) const;

 private:
  Poset poset_;
  Mode mode_;
  std::vector<Element> bridge_up_;  // fast mode: x -> y for a bridge (x, y), else size()
  bool is_bridge(Element x, Element y) const { return bridge_up_[x] == y; }
  std::vector<ElementSet> strict_vein_sets_;  // oracle mode
  std::vector<ElementSet> less_;
};

struct PruneRelation {
  bool holds = false;
  std::optional<PruneWitness> witness;
};

/// Single-pair query. Builds the whole order; prefer PruningOrder for many
/// queries on one poset.
PruneRelation pruning_leq(const Poset& p, Element x, Element y, Mode mode = Mode::fast);

struct PruneReport {
  Poset original;
  Poset pruned;
  std::map<ElementPair, PruneWitness> witnesses;
  std::size_t removed_relations = 0;
  /// Number of prunings after which the sequence p, p*, p**, ... stops
  /// changing; absent if not reached within default_max_prune_iterations.
  std::optional<std::size_t> fixpoint_reached_after;
};

/// The poset on the same elements ordered by <=*. The relation is checked to
/// be a partial order before the poset is built; a failure raises
/// PosetError{internal_order_violation}.
Poset pruned_poset(const Poset& p, Mode mode = Mode::fast);

PruneReport prune(const Poset& p, Mode mode = Mode::fast);

struct PruneIteration {
  /// p, p*, p**, ... ending with the first repeat (or after max_iters steps).
  std::vector<Poset> sequence;
  /// Index i with sequence[i] == sequence[i + 1].
  std::optional<std::size_t> fixpoint_index;
};

PruneIteration iterate_prune(const Poset& p,
                             std::size_t max_iters = default_max_prune_iterations,
                             Mode mode = Mode::fast);

/// Every pair of `m` is comparable under <=*. Requires `m` to be a maximal
/// chain of [x, y] (listed ascending) holding no strict vein of `p`;
/// otherwise PosetError{precondition_violated}.
bool star_chain_check(const Poset& p, Element x, Element y, const Chain& m,
                      Mode mode = Mode::fast);

/// For x <* y: every c in [x, y] covering x has x <* c, and every c in
/// [x, y] covered by y has c <* y. PosetError{precondition_violated} unless
/// x <* y and x != y.
bool cover_inheritance_check(const Poset& p, Element x, Element y, Mode mode = Mode::fast);

/// Same checks against an order that is already built.
bool star_chain_check(const PruningOrder& order, Element x, Element y, const Chain& m);
bool cover_inheritance_check(const PruningOrder& order, Element x, Element y);

}  // namespace posetprune
