#include "posetprune/veins.hpp"

#include <algorithm>

namespace posetprune {

namespace {

std::vector<ElementSet> maximal_chain_sets(const Poset& p) {
  std::vector<ElementSet> out;
  for (const auto& m : p.maximal_chains()) out.push_back(ElementSet::from_range(p.size(), m));
  return out;
}

bool irreducible_against(const ElementSet& c, const std::vector<ElementSet>& maximal) {
  return std::all_of(maximal.begin(), maximal.end(), [&](const ElementSet& m) {
    return !m.intersects(c) || c.is_subset_of(m);
  });
}

void require_chain(const Poset& p, const ElementSet& c) {
  if (!p.is_chain(c)) throw PosetError(ErrorCode::not_a_chain, "set is not a chain");
}

void sort_by_size_then_lex(std::vector<Chain>& chains) {
  std::sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

// Upper bridge neighbour of each element, or size() when it has none.
std::vector<Element> bridge_successor(const Poset& p) {
  std::vector<Element> next(p.size(), p.size());
  for (const auto& [x, y] : bridge_edges(p)) next[x] = y;
  return next;
}

// Maximal runs of consecutive bridge edges, each of length >= 2.
std::vector<Chain> bridge_paths(const Poset& p) {
  const auto next = bridge_successor(p);
  std::vector<bool> has_pred(p.size(), false);
  for (Element x = 0; x < p.size(); ++x)
    if (next[x] != p.size()) has_pred[next[x]] = true;
  std::vector<Chain> paths;
  for (Element x = 0; x < p.size(); ++x) {
    if (has_pred[x] || next[x] == p.size()) continue;
    Chain path{x};
    for (Element v = next[x]; v != p.size(); v = next[v]) path.push_back(v);
    paths.push_back(std::move(path));
  }
  return paths;
}

std::vector<Vein> strict_veins_fast(const Poset& p) {
  std::vector<Vein> out;
  for (const auto& path : bridge_paths(p))
    for (std::size_t i = 0; i < path.size(); ++i)
      for (std::size_t j = i + 2; j <= path.size(); ++j)
        out.emplace_back(path.begin() + static_cast<std::ptrdiff_t>(i),
                         path.begin() + static_cast<std::ptrdiff_t>(j));
  return out;
}

// Finite convex chains are saturated, so candidates are the saturated paths
// of the cover digraph; each is then tested against the definitions.
std::vector<Vein> strict_veins_oracle(const Poset& p) {
  const auto maximal = maximal_chain_sets(p);
  std::vector<Vein> out;
  Chain path;
  auto visit = [&](auto&& self, Element v) -> void {
    path.push_back(v);
    if (path.size() >= 2) {
      auto s = ElementSet::from_range(p.size(), path);
      if (p.is_convex(s) && irreducible_against(s, maximal)) out.push_back(path);
    }
    for (Element w : p.upper_covers(v)) self(self, w);
    path.pop_back();
  };
  for (Element x = 0; x < p.size(); ++x) visit(visit, x);
  return out;
}

}  // namespace

std::vector<Chain> all_chains(const Poset& p) {
  std::vector<Chain> out;
  Chain current;
  auto extend = [&](auto&& self, const ElementSet& candidates) -> void {
    candidates.for_each([&](Element y) {
      current.push_back(y);
      out.push_back(current);
      self(self, candidates & p.strict_up(y));
      current.pop_back();
    });
  };
  // Start from every element; later members are drawn from strict up-sets,
  // so each chain appears exactly once, bottom first.
  for (Element x = 0; x < p.size(); ++x) {
    current.push_back(x);
    out.push_back(current);
    extend(extend, p.strict_up(x));
    current.pop_back();
  }
  return out;
}

bool is_irreducible_chain(const Poset& p, const ElementSet& c) {
  require_chain(p, c);
  return irreducible_against(c, maximal_chain_sets(p));
}

bool check_covering_characterization(const Poset& p, const ElementSet& c,
                                     std::size_t max_meeting_chains) {
  require_chain(p, c);
  std::vector<ElementSet> meeting;
  for (auto& m : maximal_chain_sets(p))
    if (m.intersects(c)) meeting.push_back(std::move(m));
  if (meeting.size() > max_meeting_chains || meeting.size() >= 63)
    throw PosetError(ErrorCode::too_large,
                     std::to_string(meeting.size()) + " maximal chains meet the chain");

  const std::uint64_t families = std::uint64_t{1} << meeting.size();
  for (std::uint64_t mask = 1; mask < families; ++mask) {
    ElementSet covered(p.size());
    bool some_contains = false;
    for (std::size_t i = 0; i < meeting.size(); ++i) {
      if (((mask >> i) & 1U) == 0) continue;
      covered |= meeting[i];
      if (c.is_subset_of(meeting[i])) some_contains = true;
    }
    if (c.is_subset_of(covered) && !some_contains) return false;
  }
  return true;
}

bool is_vein(const Poset& p, const ElementSet& c) {
  if (c.empty()) throw PosetError(ErrorCode::empty_set, "a vein must be nonempty");
  for (Element e : c.elements())
    if (e >= p.size()) throw PosetError(ErrorCode::unknown_label, "element out of range");
  if (!p.is_chain(c) || !p.is_convex(c)) return false;
  return is_irreducible_chain(p, c);
}

std::vector<BridgeEdge> bridge_edges(const Poset& p) {
  std::vector<BridgeEdge> out;
  for (Element x = 0; x < p.size(); ++x) {
    const auto& uc = p.upper_covers(x);
    if (uc.size() == 1 && p.lower_covers(uc.front()).size() == 1) out.emplace_back(x, uc.front());
  }
  return out;
}

std::vector<Vein> strict_veins(const Poset& p, Mode mode) {
  auto out = mode == Mode::fast ? strict_veins_fast(p) : strict_veins_oracle(p);
  sort_by_size_then_lex(out);
  return out;
}

std::vector<Vein> all_veins(const Poset& p, Mode mode) {
  std::vector<Vein> out;
  for (Element x = 0; x < p.size(); ++x) out.push_back({x});
  auto strict = strict_veins(p, mode);
  out.insert(out.end(), strict.begin(), strict.end());
  sort_by_size_then_lex(out);
  return out;
}

std::vector<Chain> all_irreducible_chains(const Poset& p) {
  const auto maximal = maximal_chain_sets(p);
  std::vector<Chain> out;
  for (auto& c : all_chains(p))
    if (irreducible_against(ElementSet::from_range(p.size(), c), maximal)) out.push_back(std::move(c));
  sort_by_size_then_lex(out);
  return out;
}

std::vector<Vein> maximal_veins(const Poset& p) {
  std::vector<Vein> out = bridge_paths(p);
  std::vector<bool> used(p.size(), false);
  for (const auto& path : out)
    for (Element e : path) used[e] = true;
  for (Element x = 0; x < p.size(); ++x)
    if (!used[x]) out.push_back({x});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace posetprune
