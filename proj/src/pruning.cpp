#include "posetprune/pruning.hpp"

#include <algorithm>

namespace posetprune {

PruningOrder::PruningOrder(Poset p, Mode mode) : poset_(std::move(p)), mode_(mode) {
  const std::size_t n = poset_.size();
  less_.assign(n, ElementSet(n));

  if (mode_ == Mode::fast) {
    bridge_up_.assign(n, n);
    for (const auto& [x, y] : bridge_edges(poset_)) bridge_up_[x] = y;
    for (Element x = 0; x < n; ++x) {
      std::vector<Element> stack{x};
      while (!stack.empty()) {
        Element v = stack.back();
        stack.pop_back();
        for (Element w : poset_.upper_covers(v)) {
          if (is_bridge(v, w) || less_[x].contains(w)) continue;
          less_[x].insert(w);
          stack.push_back(w);
        }
      }
    }
    return;
  }

  for (const auto& v : strict_veins(poset_, Mode::oracle))
    strict_vein_sets_.push_back(ElementSet::from_range(n, v));
  for (Element x = 0; x < n; ++x) {
    poset_.strict_up(x).for_each([&](Element y) {
      for (const auto& m : poset_.maximal_chains_in_interval(x, y)) {
        if (avoids_strict_veins(m)) {
          less_[x].insert(y);
          break;
        }
      }
    });
  }
}

bool PruningOrder::avoids_strict_veins(const Chain& chain) const {
  if (mode_ == Mode::fast) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (is_bridge(chain[i], chain[i + 1])) return false;
    return true;
  }
  auto s = ElementSet::from_range(poset_.size(), chain);
  return std::none_of(strict_vein_sets_.begin(), strict_vein_sets_.end(),
                      [&](const ElementSet& v) { return v.is_subset_of(s); });
}

std::optional<PruneWitness> PruningOrder::witness(Element x, Element y) const {
  if (x == y || !less(x, y)) return std::nullopt;
  if (mode_ == Mode::oracle) {
    for (auto& m : poset_.maximal_chains_in_interval(x, y))
      if (avoids_strict_veins(m)) return PruneWitness{x, y, std::move(m)};
    return std::nullopt;
  }
  // Lexicographically first non-bridge cover path from x to y.
  Chain path{x};
  auto search = [&](auto&& self, Element v) -> bool {
    if (v == y) return true;
    for (Element w : poset_.upper_covers(v)) {
      if (is_bridge(v, w) || (w != y && !less_[w].contains(y))) continue;
      path.push_back(w);
      if (self(self, w)) return true;
      path.pop_back();
    }
    return false;
  };
  search(search, x);
  return PruneWitness{x, y, std::move(path)};
}

PruneRelation pruning_leq(const Poset& p, Element x, Element y, Mode mode) {
  if (x >= p.size() || y >= p.size())
    throw PosetError(ErrorCode::unknown_label, "element index out of range");
  PruningOrder order(p, mode);
  return {order.leq(x, y), order.witness(x, y)};
}

namespace {

Poset build_pruned(const PruningOrder& order) {
  const Poset& p = order.poset();
  const std::size_t n = p.size();
  std::vector<ElementPair> pairs;
  for (Element x = 0; x < n; ++x) {
    order.strict_up(x).for_each([&](Element y) {
      if (order.less(y, x))
        throw PosetError(ErrorCode::internal_order_violation,
                         "pruning order not antisymmetric on " + p.label(x) + ", " + p.label(y));
      if (!p.less(x, y))
        throw PosetError(ErrorCode::internal_order_violation,
                         "pruning order relates " + p.label(x) + " < " + p.label(y) +
                             " which the original order does not");
      if (!order.strict_up(y).is_subset_of(order.strict_up(x)))
        throw PosetError(ErrorCode::internal_order_violation,
                         "pruning order not transitive through " + p.label(x) + " < " + p.label(y));
      pairs.emplace_back(x, y);
    });
  }
  return Poset::from_indexed(p.labels(), pairs);
}

}  // namespace

Poset pruned_poset(const Poset& p, Mode mode) {
  return build_pruned(PruningOrder(p, mode));
}

PruneIteration iterate_prune(const Poset& p, std::size_t max_iters, Mode mode) {
  if (max_iters == 0)
    throw PosetError(ErrorCode::precondition_violated, "max_iters must be at least 1");
  PruneIteration result;
  result.sequence.push_back(p);
  for (std::size_t i = 0; i < max_iters; ++i) {
    result.sequence.push_back(pruned_poset(result.sequence.back(), mode));
    const auto& prev = result.sequence[result.sequence.size() - 2];
    if (result.sequence.back() == prev) {
      result.fixpoint_index = i;
      break;
    }
  }
  return result;
}

PruneReport prune(const Poset& p, Mode mode) {
  PruningOrder order(p, mode);
  PruneReport report{p, build_pruned(order), {}, 0, std::nullopt};
  for (const auto& [x, y] : report.pruned.relations())
    report.witnesses.emplace(ElementPair{x, y}, *order.witness(x, y));
  report.removed_relations = p.relation_count() - report.pruned.relation_count();

  if (report.pruned == p) {
    report.fixpoint_reached_after = 0;
  } else {
    auto rest = iterate_prune(report.pruned, default_max_prune_iterations - 1, mode);
    if (rest.fixpoint_index) report.fixpoint_reached_after = *rest.fixpoint_index + 1;
  }
  return report;
}

bool star_chain_check(const PruningOrder& order, Element x, Element y, const Chain& m) {
  const Poset& p = order.poset();
  if (x >= p.size() || y >= p.size())
    throw PosetError(ErrorCode::unknown_label, "element index out of range");
  if (!p.leq(x, y))
    throw PosetError(ErrorCode::precondition_violated, "x is not below y");
  const auto candidates = p.maximal_chains_in_interval(x, y);
  if (std::find(candidates.begin(), candidates.end(), m) == candidates.end())
    throw PosetError(ErrorCode::precondition_violated, "chain is not a maximal chain of [x, y]");
  if (!order.avoids_strict_veins(m))
    throw PosetError(ErrorCode::precondition_violated, "chain contains a strict vein");
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!order.leq(m[i], m[j])) return false;
  return true;
}

bool star_chain_check(const Poset& p, Element x, Element y, const Chain& m, Mode mode) {
  return star_chain_check(PruningOrder(p, mode), x, y, m);
}

bool cover_inheritance_check(const PruningOrder& order, Element x, Element y) {
  const Poset& p = order.poset();
  if (x >= p.size() || y >= p.size())
    throw PosetError(ErrorCode::unknown_label, "element index out of range");
  if (x == y || !order.less(x, y))
    throw PosetError(ErrorCode::precondition_violated, "x <* y does not hold");
  bool ok = true;
  p.interval(x, y).for_each([&](Element c) {
    if (p.covers(x, c) && !order.less(x, c)) ok = false;
    if (p.covers(c, y) && !order.less(c, y)) ok = false;
  });
  return ok;
}

bool cover_inheritance_check(const Poset& p, Element x, Element y, Mode mode) {
  return cover_inheritance_check(PruningOrder(p, mode), x, y);
}

}  // namespace posetprune
