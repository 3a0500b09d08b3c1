#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posetprune/poset.hpp"

namespace posetprune {

enum class GenKind { chain, antichain, boolean, fence, named, random, downset_lattice };

std::optional<GenKind> parse_gen_kind(std::string_view name);
std::string_view to_string(GenKind kind);

/// Generator parameters. `edge_prob` is required for (and only for) the
/// random kind; `name` selects the fixture for the named kind.
struct GenSpec {
  GenKind kind = GenKind::chain;
  std::size_t size = 1;
  std::uint64_t seed = 0;
  std::optional<double> edge_prob;
  std::string name;
};

/// Density of the base poset drawn by the downset_lattice kind.
inline constexpr double downset_base_edge_prob = 0.4;

inline constexpr std::size_t max_boolean_rank = 12;
inline constexpr std::size_t max_downset_base = 12;

/// Deterministic in every field. Randomness comes from std::mt19937_64 seeded
/// with `seed` (its output sequence is fixed by the C++ standard), and a
/// Bernoulli(p) draw is `(next() >> 11) * 2^-53 < p`. The random kind walks
/// the pairs (i, j), i < j, in row-major order over the element order
/// a, b, c, ... and keeps each with probability edge_prob; the order is the
/// transitive closure. Throws PosetError{invalid_spec}.
Poset generate(const GenSpec& spec);

/// C3, Yp, Vee, B3 and A2.
std::map<std::string, Poset> fixtures();

/// Labels used by the generators: a..z for up to 26 elements, otherwise
/// e00, e01, ... zero-padded so lexicographic and numeric order agree.
std::string element_label(std::size_t index, std::size_t count);

/// `count` random posets with sizes in [1, max_size] and edge probabilities
/// in [0.1, 0.9], all derived from `seed`.
std::vector<Poset> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_size);

/// `count` down-set lattices of random base posets with 1..max_base elements.
std::vector<Poset> downset_corpus(std::uint64_t seed, std::size_t count, std::size_t max_base);

/// The lattice of down-sets of `base` ordered by inclusion. Down-sets are
/// labelled by their members, e.g. "{a,c}", and "{}" for the empty one.
Poset downset_lattice(const Poset& base);

}  // namespace posetprune
