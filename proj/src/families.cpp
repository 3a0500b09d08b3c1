#include "posetprune/families.hpp"

#include <random>

namespace posetprune {

namespace {

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::string> letter_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_label(i, n));
  return out;
}

Poset boolean_lattice(std::size_t rank) {
  const std::size_t count = std::size_t{1} << rank;
  std::vector<std::string> labels;
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::string s = "{";
    for (std::size_t i = 0; i < rank; ++i) {
      if (((mask >> i) & 1U) == 0) continue;
      if (s.size() > 1) s += ',';
      s += std::to_string(i + 1);
    }
    labels.push_back(s + "}");
  }
  std::vector<ElementPair> pairs;
  for (std::size_t mask = 0; mask < count; ++mask)
    for (std::size_t i = 0; i < rank; ++i)
      if (((mask >> i) & 1U) == 0) pairs.emplace_back(mask, mask | (std::size_t{1} << i));
  return Poset::from_indexed(std::move(labels), pairs);
}

Poset random_poset(std::size_t n, std::uint64_t seed, double edge_prob) {
  std::mt19937_64 rng(seed);
  std::vector<ElementPair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (unit_draw(rng) < edge_prob) pairs.emplace_back(i, j);
  return Poset::from_indexed(letter_labels(n), pairs);
}

[[noreturn]] void invalid(const std::string& why) {
  throw PosetError(ErrorCode::invalid_spec, why);
}

}  // namespace

std::optional<GenKind> parse_gen_kind(std::string_view name) {
  static const std::map<std::string_view, GenKind> kinds{
      {"chain", GenKind::chain},     {"antichain", GenKind::antichain},
      {"boolean", GenKind::boolean}, {"fence", GenKind::fence},
      {"named", GenKind::named},     {"random", GenKind::random},
      {"downset_lattice", GenKind::downset_lattice}};
  auto it = kinds.find(name);
  if (it == kinds.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::chain: return "chain";
    case GenKind::antichain: return "antichain";
    case GenKind::boolean: return "boolean";
    case GenKind::fence: return "fence";
    case GenKind::named: return "named";
    case GenKind::random: return "random";
    case GenKind::downset_lattice: return "downset_lattice";
  }
  return "unknown";
}

std::string element_label(std::size_t index, std::size_t count) {
  if (count <= 26) return std::string(1, static_cast<char>('a' + index));
  std::size_t width = std::to_string(count - 1).size();
  std::string digits = std::to_string(index);
  return "e" + std::string(width - digits.size(), '0') + digits;
}

Poset generate(const GenSpec& spec) {
  if (spec.size == 0) invalid("size must be at least 1");
  if (spec.edge_prob.has_value() != (spec.kind == GenKind::random))
    invalid("edge_prob is required for the random kind and only there");
  const std::size_t n = spec.size;

  switch (spec.kind) {
    case GenKind::chain: {
      std::vector<ElementPair> pairs;
      for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
      return Poset::from_indexed(letter_labels(n), pairs);
    }
    case GenKind::antichain:
      return Poset::from_indexed(letter_labels(n), {});
    case GenKind::boolean:
      if (n > max_boolean_rank) invalid("boolean rank too large");
      return boolean_lattice(n);
    case GenKind::fence: {
      // a < b > c < d > ...
      std::vector<ElementPair> pairs;
      for (std::size_t i = 0; i + 1 < n; ++i)
        pairs.push_back(i % 2 == 0 ? ElementPair{i, i + 1} : ElementPair{i + 1, i});
      return Poset::from_indexed(letter_labels(n), pairs);
    }
    case GenKind::named: {
      auto all = fixtures();
      auto it = all.find(spec.name);
      if (it == all.end()) invalid("unknown fixture '" + spec.name + "'");
      return it->second;
    }
    case GenKind::random: {
      double prob = *spec.edge_prob;
      if (!(prob >= 0.0 && prob <= 1.0)) invalid("edge_prob must lie in [0, 1]");
      return random_poset(n, spec.seed, prob);
    }
    case GenKind::downset_lattice:
      if (n > max_downset_base) invalid("downset_lattice base too large");
      return downset_lattice(random_poset(n, spec.seed, downset_base_edge_prob));
  }
  invalid("unknown kind");
}

Poset downset_lattice(const Poset& base) {
  const std::size_t n = base.size();
  if (n >= 63) invalid("downset_lattice base too large");
  std::vector<std::uint64_t> below(n, 0);
  for (Element x = 0; x < n; ++x)
    base.strict_down(x).for_each([&](Element y) { below[x] |= std::uint64_t{1} << y; });

  std::map<std::uint64_t, std::size_t> index;
  std::vector<std::uint64_t> downsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (Element x = 0; x < n && closed; ++x)
      if (((mask >> x) & 1U) != 0 && (below[x] & ~mask) != 0) closed = false;
    if (!closed) continue;
    index.emplace(mask, downsets.size());
    downsets.push_back(mask);
  }

  std::vector<std::string> labels;
  std::vector<ElementPair> pairs;
  for (std::uint64_t mask : downsets) {
    std::string s = "{";
    for (Element x = 0; x < n; ++x) {
      if (((mask >> x) & 1U) == 0) continue;
      if (s.size() > 1) s += ',';
      s += base.label(x);
    }
    labels.push_back(s + "}");
    for (Element x = 0; x < n; ++x) {
      std::uint64_t bit = std::uint64_t{1} << x;
      if ((mask & bit) == 0 && (below[x] & ~mask) == 0)
        pairs.emplace_back(index.at(mask), index.at(mask | bit));
    }
  }
  return Poset::from_indexed(std::move(labels), pairs);
}

std::map<std::string, Poset> fixtures() {
  std::map<std::string, Poset> out;
  out.emplace("C3", Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
  out.emplace("Yp", Poset::from_relations({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}}));
  out.emplace("Vee", Poset::from_relations({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}));
  out.emplace("B3", boolean_lattice(3));
  out.emplace("A2", Poset::from_relations({"a", "b"}, {}));
  return out;
}

std::vector<Poset> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_size) {
  if (max_size == 0) invalid("max_size must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<Poset> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t size = 1 + static_cast<std::size_t>(rng() % max_size);
    double prob = 0.1 + 0.8 * unit_draw(rng);
    std::uint64_t sub_seed = rng();
    out.push_back(generate({GenKind::random, size, sub_seed, prob, {}}));
  }
  return out;
}

std::vector<Poset> downset_corpus(std::uint64_t seed, std::size_t count, std::size_t max_base) {
  if (max_base == 0) invalid("max_base must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<Poset> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t size = 1 + static_cast<std::size_t>(rng() % max_base);
    std::uint64_t sub_seed = rng();
    out.push_back(generate({GenKind::downset_lattice, size, sub_seed, std::nullopt, {}}));
  }
  return out;
}

}  // namespace posetprune
