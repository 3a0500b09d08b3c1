#include "posetprune/theorems.hpp"

#include <algorithm>
#include <random>

#include "posetprune/connectivity.hpp"
#include "posetprune/families.hpp"
#include "posetprune/io.hpp"
#include "posetprune/irreducibles.hpp"
#include "posetprune/pruning.hpp"
#include "posetprune/veins.hpp"

namespace posetprune {

namespace {

using Result = std::optional<std::string>;

std::string show(const Poset& p, const Chain& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + p.label(c[i]);
  return s + "}";
}

std::string show(const Poset& p, const ElementSet& s) { return show(p, s.elements()); }

Result guarded(const std::function<Result()>& body) {
  try {
    return body();
  } catch (const PosetError& e) {
    return std::string(to_string(e.code())) + ": " + e.what();
  }
}

std::vector<ElementSet> as_sets(const Poset& p, const std::vector<Chain>& chains) {
  std::vector<ElementSet> out;
  for (const auto& c : chains) out.push_back(ElementSet::from_range(p.size(), c));
  return out;
}

Result partial_order(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    for (Mode mode : {Mode::fast, Mode::oracle}) {
      PruningOrder order(p, mode);
      for (Element x = 0; x < p.size(); ++x) {
        for (Element y = 0; y < p.size(); ++y) {
          if (x != y && order.leq(x, y) && order.leq(y, x))
            return "antisymmetry fails on " + p.label(x) + ", " + p.label(y);
          if (!order.leq(x, y)) continue;
          for (Element z = 0; z < p.size(); ++z)
            if (order.leq(y, z) && !order.leq(x, z))
              return "transitivity fails on " + p.label(x) + ", " + p.label(y) + ", " + p.label(z);
        }
      }
      pruned_poset(p, mode);
    }
    return std::nullopt;
  });
}

Result idempotent(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    Poset once = pruned_poset(p);
    if (pruned_poset(once) != once) return "pruning the pruned poset changes it";
    return std::nullopt;
  });
}

Result shrinks(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    Poset pruned = pruned_poset(p);
    if (pruned.labels() != p.labels()) return "pruning changed the element set";
    for (const auto& [x, y] : pruned.relations())
      if (!p.less(x, y)) return "pruning added " + p.label(x) + " < " + p.label(y);
    return std::nullopt;
  });
}

Result self_dual(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    if (pruned_poset(p.opposite()) != pruned_poset(p).opposite())
      return "pruning does not commute with the opposite order";
    return std::nullopt;
  });
}

Result veins_fast_oracle(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    auto fast = strict_veins(p, Mode::fast);
    auto oracle = strict_veins(p, Mode::oracle);
    if (fast != oracle)
      return "strict veins differ: fast " + std::to_string(fast.size()) + ", oracle " +
             std::to_string(oracle.size());
    return std::nullopt;
  });
}

Result pruning_fast_oracle(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    PruningOrder fast(p, Mode::fast);
    PruningOrder oracle(p, Mode::oracle);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y)
        if (fast.leq(x, y) != oracle.leq(x, y))
          return "modes disagree on " + p.label(x) + " <=* " + p.label(y);
    return std::nullopt;
  });
}

Result lemmas(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    PruningOrder order(p, Mode::oracle);
    for (Element x = 0; x < p.size(); ++x) {
      Result failure;
      order.strict_up(x).for_each([&](Element y) {
        if (failure) return;
        for (const auto& m : p.maximal_chains_in_interval(x, y))
          if (order.avoids_strict_veins(m) && !star_chain_check(order, x, y, m))
            failure = "chain " + show(p, m) + " is not a *-chain";
        if (!failure && !cover_inheritance_check(order, x, y))
          failure = "covers of [" + p.label(x) + ", " + p.label(y) + "] not *-related";
      });
      if (failure) return failure;
    }
    return std::nullopt;
  });
}

Result family_is_connectivity(const Poset& p, const std::vector<Chain>& family,
                              const std::vector<Chain>& expected_components,
                              const std::string& what) {
  SetFamily f(p.all(), as_sets(p, family));
  if (!is_connectivity(f)) return what + " do not form a connectivity";
  if (!is_point_connected(f)) return what + " are not point-connected";
  auto comps = components(f);
  auto expected = as_sets(p, expected_components);
  std::sort(expected.begin(), expected.end());
  if (comps != expected) return "components of " + what + " differ from the maximal ones";
  for (Element x = 0; x < p.size(); ++x) {
    auto c = component_of(f, x);
    if (!f.contains(c)) return "union of " + what + " through " + p.label(x) + " is not one";
  }
  return std::nullopt;
}

std::vector<Chain> inclusion_maximal(const Poset& p, const std::vector<Chain>& chains) {
  auto sets = as_sets(p, chains);
  std::vector<Chain> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < sets.size() && maximal; ++j)
      if (i != j && sets[i] != sets[j] && sets[i].is_subset_of(sets[j])) maximal = false;
    if (maximal) out.push_back(chains[i]);
  }
  return out;
}

Result irreducible_chain_connectivity(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    auto chains = all_irreducible_chains(p);
    return family_is_connectivity(p, chains, inclusion_maximal(p, chains), "irreducible chains");
  });
}

Result vein_connectivity(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    return family_is_connectivity(p, all_veins(p, Mode::oracle), maximal_veins(p), "veins");
  });
}

// Only the forward direction: the converse fails on finite posets (in Yp,
// {a,b,c} passes the covering test but {a,b,d} meets it).
Result covering_characterization(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    for (const auto& c : all_chains(p)) {
      auto s = ElementSet::from_range(p.size(), c);
      if (is_irreducible_chain(p, s) && !check_covering_characterization(p, s, 62))
        return "irreducible chain " + show(p, c) + " fails the covering test";
    }
    return std::nullopt;
  });
}

Result subposet_veins(const Poset& p, std::uint64_t seed) {
  return guarded([&]() -> Result {
    std::mt19937_64 rng(seed);
    const auto veins = all_veins(p, Mode::oracle);
    for (int trial = 0; trial < 8; ++trial) {
      ElementSet q(p.size());
      for (Element x = 0; x < p.size(); ++x)
        if (rng() % 2 == 0) q.insert(x);
      if (q.empty()) q.insert(static_cast<Element>(rng() % p.size()));
      Poset sub = p.induced_subposet(q);
      for (const auto& v : veins) {
        auto meet = ElementSet::from_range(p.size(), v) & q;
        if (meet.empty()) continue;
        if (!is_vein(sub, sub.set_of(p.labels_of(meet))))
          return show(p, v) + " restricted to " + show(p, q) + " is not a vein";
      }
    }
    return std::nullopt;
  });
}

Result maximal_veins_partition(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    std::vector<int> hits(p.size(), 0);
    for (const auto& v : maximal_veins(p)) {
      if (!is_vein(p, ElementSet::from_range(p.size(), v))) return show(p, v) + " is not a vein";
      for (Element e : v) ++hits[e];
    }
    for (Element x = 0; x < p.size(); ++x)
      if (hits[x] != 1) return p.label(x) + " lies in " + std::to_string(hits[x]) + " maximal veins";
    return std::nullopt;
  });
}

Result convex_chains_saturated(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    for (const auto& c : all_chains(p)) {
      auto s = ElementSet::from_range(p.size(), c);
      if (p.is_convex(s) && !p.is_saturated_chain(s)) return show(p, c) + " is convex but not saturated";
    }
    return std::nullopt;
  });
}

Result irreducibles_preserved(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    if (!p.is_conditionally_complete()) return std::nullopt;
    for (Element x = 0; x < p.size(); ++x)
      if (is_irreducible(p, x) != is_irreducible_via_meet(p, x))
        return "filter and meet definitions disagree on " + p.label(x);
    if (!preservation_report(p).preserved) return "pruning changed the (co)irreducible elements";
    return std::nullopt;
  });
}

Result fixpoint_within_one(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    auto it = iterate_prune(p);
    if (!it.fixpoint_index || *it.fixpoint_index > 1) return "pruning did not stabilise after one step";
    return std::nullopt;
  });
}

Result text_round_trip(const Poset& p, std::uint64_t) {
  return guarded([&]() -> Result {
    if (read_poset(emit_text(p)) != p) return "text round-trip changed the poset";
    if (to_poset(parse_json(emit_json(to_document(p)))) != p) return "JSON round-trip changed the poset";
    return std::nullopt;
  });
}

}  // namespace

const std::vector<Property>& theorem_suite() {
  static const std::vector<Property> suite{
      {"pruning_is_partial_order", 12, partial_order},
      {"pruning_is_idempotent", 64, idempotent},
      {"pruning_only_removes_relations", 64, shrinks},
      {"pruning_commutes_with_opposite", 64, self_dual},
      {"strict_veins_fast_matches_oracle", 12, veins_fast_oracle},
      {"pruning_fast_matches_oracle", 12, pruning_fast_oracle},
      {"star_chain_and_cover_lemmas", 12, lemmas},
      {"irreducible_chains_form_connectivity", 8, irreducible_chain_connectivity},
      {"veins_form_connectivity", 8, vein_connectivity},
      {"irreducible_chains_pass_covering_test", 7, covering_characterization},
      {"veins_restrict_to_subposets", 10, subposet_veins},
      {"maximal_veins_partition", 12, maximal_veins_partition},
      {"convex_chains_are_saturated", 8, convex_chains_saturated},
      {"irreducibles_preserved_by_pruning", 64, irreducibles_preserved},
      {"pruning_fixpoint_within_one_step", 64, fixpoint_within_one},
      {"document_round_trip", 64, text_round_trip},
  };
  return suite;
}

std::vector<Poset> check_corpus(const CheckOptions& options) {
  std::vector<Poset> corpus;
  for (auto& [name, p] : fixtures()) corpus.push_back(p);
  for (auto& p : random_corpus(options.seed, options.count, options.max_size)) corpus.push_back(std::move(p));
  for (auto& p : downset_corpus(options.seed ^ 0xd0d0d0d0ULL, std::max<std::size_t>(1, options.count / 4), 4))
    corpus.push_back(std::move(p));
  return corpus;
}

Poset shrink_counterexample(const Poset& p, const Property& property, std::uint64_t seed) {
  Poset current = p;
  bool progress = true;
  while (progress && current.size() > 1) {
    progress = false;
    for (Element x = 0; x < current.size(); ++x) {
      ElementSet keep = current.all();
      keep.erase(x);
      Poset smaller = current.induced_subposet(keep);
      if (property.check(smaller, seed)) {
        current = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return current;
}

CheckSummary run_theorem_suite(const CheckOptions& options) {
  CheckSummary summary;
  const auto corpus = check_corpus(options);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Poset& p = corpus[i];
    const std::uint64_t seed = options.seed + i;
    ++summary.posets_checked;
    for (const auto& property : theorem_suite()) {
      if (p.size() > property.max_size) continue;
      ++summary.property_runs;
      if (auto message = property.check(p, seed))
        summary.failures.push_back({property.name, *message, shrink_counterexample(p, property, seed)});
    }
  }
  return summary;
}

}  // namespace posetprune
