#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posetprune/poset.hpp"

namespace posetprune {

/// One executable claim about finite posets. `check` returns a description
/// of the violation, or nothing when the poset satisfies the claim. Posets
/// larger than `max_size` are skipped (oracle cost grows exponentially).
struct Property {
  std::string name;
  std::size_t max_size;
  std::function<std::optional<std::string>(const Poset&, std::uint64_t seed)> check;
};

/// The full suite: pruning is a partial order, idempotent, shrinking and
/// self-dual; fast and oracle modes agree; the chain and cover lemmas hold;
/// irreducible chains and veins form point-connected connectivities whose
/// components are the maximal ones; irreducible chains pass the covering test; vein
/// restriction to subposets; maximal veins partition; convex chains are
/// saturated; irreducibles are preserved on conditionally complete posets;
/// text round-trip.
const std::vector<Property>& theorem_suite();

struct PropertyFailure {
  std::string property;
  std::string message;
  /// Smallest induced subposet (greedy element deletion) still failing.
  Poset counterexample;
};

struct CheckOptions {
  std::uint64_t seed = 42;
  std::size_t count = 100;
  std::size_t max_size = 10;
};

struct CheckSummary {
  std::size_t posets_checked = 0;
  std::size_t property_runs = 0;
  std::vector<PropertyFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Corpus used by `check`: the named fixtures, `count` random posets, and
/// count / 4 (at least one) down-set lattices of bases up to 4 elements.
std::vector<Poset> check_corpus(const CheckOptions& options);

/// Greedily deletes elements while `property` keeps failing.
Poset shrink_counterexample(const Poset& p, const Property& property, std::uint64_t seed);

CheckSummary run_theorem_suite(const CheckOptions& options);

}  // namespace posetprune
