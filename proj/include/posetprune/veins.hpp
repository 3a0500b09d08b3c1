#pragma once

#include <cstddef>
#include <vector>

#include "posetprune/poset.hpp"

namespace posetprune {

/// `oracle` evaluates the order-theoretic definitions literally (maximal
/// chain enumeration); `fast` uses the cover-graph characterization. The two
/// are cross-checked by the test suites and must always agree.
enum class Mode { fast, oracle };

/// A vein is an irreducible convex chain; stored ascending.
using Vein = Chain;

/// Cover pair (x, y) where y is the only upper cover of x and x is the only
/// lower cover of y. These are exactly the two-element veins.
using BridgeEdge = ElementPair;

/// Every chain of `p`, each once, ascending. Exponential; small posets only.
std::vector<Chain> all_chains(const Poset& p);

/// A chain meeting a maximal chain is contained in it, for every maximal
/// chain. Throws PosetError{not_a_chain} (or empty_set).
bool is_irreducible_chain(const Poset& p, const ElementSet& c);

/// Checks, for every nonempty family of maximal chains covering `c`, that
/// one member of the family contains `c`. Enumerates families exhaustively.
/// Maximal chains missing `c` neither help cover it nor contain it, so only
/// subsets of the chains meeting `c` are enumerated; more than
/// `max_meeting_chains` of them raises PosetError{too_large}.
///
/// Irreducible chains always pass. The converse does not hold for finite
/// posets: in Yp the chain {a,b,c} passes (any cover of c uses {a,b,c}
/// itself) yet {a,b,d} meets it without containing it.
bool check_covering_characterization(const Poset& p, const ElementSet& c,
                                     std::size_t max_meeting_chains = 20);

/// Chain, convex, and irreducible, evaluated by definition.
bool is_vein(const Poset& p, const ElementSet& c);

std::vector<BridgeEdge> bridge_edges(const Poset& p);

/// Veins with at least two elements, sorted by size then lexicographically.
std::vector<Vein> strict_veins(const Poset& p, Mode mode = Mode::fast);

/// Every vein including singletons, same ordering as strict_veins.
std::vector<Vein> all_veins(const Poset& p, Mode mode = Mode::fast);

/// Every irreducible chain (convex or not), by definition.
std::vector<Chain> all_irreducible_chains(const Poset& p);

/// Inclusion-maximal veins. They partition the ground set; sorted
/// lexicographically.
std::vector<Vein> maximal_veins(const Poset& p);

}  // namespace posetprune
