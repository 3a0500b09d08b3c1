#include "posetprune/poset.hpp"

#include <algorithm>
#include <numeric>

namespace posetprune {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::unknown_label: return "UnknownLabel";
    case ErrorCode::cycle_detected: return "CycleDetected";
    case ErrorCode::empty_set: return "EmptySet";
    case ErrorCode::not_comparable: return "NotComparable";
    case ErrorCode::not_a_chain: return "NotAChain";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::member_not_subset: return "MemberNotSubset";
    case ErrorCode::not_a_connectivity: return "NotAConnectivity";
    case ErrorCode::not_conditionally_complete: return "NotConditionallyComplete";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::internal_order_violation: return "InternalOrderViolation";
    case ErrorCode::invalid_spec: return "InvalidSpec";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string join_cycle(const std::vector<std::string>& cycle) {
  std::string out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i != 0) out += " < ";
    out += cycle[i];
  }
  return out;
}

// Returns a cycle (as vertex indices, first repeated last) or an empty vector.
std::vector<Element> find_cycle(const std::vector<ElementSet>& succ) {
  const std::size_t n = succ.size();
  enum class Color { white, grey, black };
  std::vector<Color> color(n, Color::white);
  std::vector<Element> parent(n, n);

  for (Element root = 0; root < n; ++root) {
    if (color[root] != Color::white) continue;
    // Iterative DFS: stack of (vertex, remaining successors).
    std::vector<std::pair<Element, std::vector<Element>>> stack;
    stack.emplace_back(root, succ[root].elements());
    color[root] = Color::grey;
    while (!stack.empty()) {
      auto& [v, rest] = stack.back();
      if (rest.empty()) {
        color[v] = Color::black;
        stack.pop_back();
        continue;
      }
      Element w = rest.back();
      rest.pop_back();
      if (color[w] == Color::grey) {
        std::vector<Element> cycle{w};
        for (Element u = v; u != w; u = parent[u]) cycle.push_back(u);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (color[w] == Color::white) {
        color[w] = Color::grey;
        parent[w] = v;
        stack.emplace_back(w, succ[w].elements());
      }
    }
  }
  return {};
}

}  // namespace

CycleError::CycleError(std::vector<std::string> cycle)
    : PosetError(ErrorCode::cycle_detected,
                 "relations contain a cycle: " + join_cycle(cycle)),
      cycle_(std::move(cycle)) {}

Poset Poset::from_relations(std::vector<std::string> labels,
                            const std::vector<LabelPair>& pairs) {
  std::unordered_map<std::string, Element> position;
  for (Element i = 0; i < labels.size(); ++i) {
    if (!position.emplace(labels[i], i).second)
      throw PosetError(ErrorCode::duplicate_label, "duplicate label '" + labels[i] + "'");
  }
  std::vector<ElementPair> indexed;
  indexed.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = position.find(a);
    auto ib = position.find(b);
    if (ia == position.end())
      throw PosetError(ErrorCode::unknown_label, "unknown label '" + a + "'");
    if (ib == position.end())
      throw PosetError(ErrorCode::unknown_label, "unknown label '" + b + "'");
    indexed.emplace_back(ia->second, ib->second);
  }
  return from_indexed(std::move(labels), indexed);
}

Poset Poset::from_indexed(std::vector<std::string> labels,
                          const std::vector<ElementPair>& pairs) {
  const std::size_t n = labels.size();
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::sort(order.begin(), order.end(),
            [&](Element a, Element b) { return labels[a] < labels[b]; });
  std::vector<Element> rank(n);
  std::vector<std::string> sorted;
  sorted.reserve(n);
  for (Element i = 0; i < n; ++i) {
    rank[order[i]] = i;
    if (i > 0 && labels[order[i]] == labels[order[i - 1]])
      throw PosetError(ErrorCode::duplicate_label,
                       "duplicate label '" + labels[order[i]] + "'");
    sorted.push_back(std::move(labels[order[i]]));
  }
  std::vector<ElementSet> succ(n, ElementSet(n));
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n)
      throw PosetError(ErrorCode::unknown_label, "relation index out of range");
    succ[rank[a]].insert(rank[b]);
  }
  return build(std::move(sorted), std::move(succ));
}

Poset Poset::build(std::vector<std::string> sorted_labels,
                   std::vector<ElementSet> successors) {
  const std::size_t n = sorted_labels.size();
  if (auto cycle = find_cycle(successors); !cycle.empty()) {
    std::vector<std::string> names;
    for (Element e : cycle) names.push_back(sorted_labels[e]);
    throw CycleError(std::move(names));
  }

  // Reverse topological order via Kahn on the (acyclic) relation graph.
  std::vector<std::size_t> indegree(n, 0);
  for (Element x = 0; x < n; ++x) successors[x].for_each([&](Element y) { ++indegree[y]; });
  std::vector<Element> topo;
  topo.reserve(n);
  for (Element x = 0; x < n; ++x)
    if (indegree[x] == 0) topo.push_back(x);
  for (std::size_t i = 0; i < topo.size(); ++i) {
    successors[topo[i]].for_each([&](Element y) {
      if (--indegree[y] == 0) topo.push_back(y);
    });
  }

  auto rep = std::make_shared<Rep>();
  rep->labels = std::move(sorted_labels);
  rep->up.assign(n, ElementSet(n));
  rep->down.assign(n, ElementSet(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Element x = *it;
    ElementSet reach = successors[x];
    successors[x].for_each([&](Element y) { reach |= rep->up[y]; });
    rep->up[x] = std::move(reach);
  }
  for (Element x = 0; x < n; ++x) rep->up[x].for_each([&](Element y) { rep->down[y].insert(x); });

  rep->upper_covers.assign(n, {});
  rep->lower_covers.assign(n, {});
  for (Element x = 0; x < n; ++x) {
    ElementSet direct = rep->up[x];
    rep->up[x].for_each([&](Element z) { direct -= rep->up[z]; });
    direct.for_each([&](Element y) {
      rep->upper_covers[x].push_back(y);
      rep->lower_covers[y].push_back(x);
    });
  }
  for (auto& lc : rep->lower_covers) std::sort(lc.begin(), lc.end());
  Poset p;
  p.rep_ = std::move(rep);
  return p;
}

std::shared_ptr<const Poset::Rep> Poset::empty_rep() {
  static const auto empty = std::make_shared<const Rep>();
  return empty;
}

void Poset::check_element(Element e) const {
  if (e >= size())
    throw PosetError(ErrorCode::unknown_label, "element index " + std::to_string(e) + " out of range");
}

std::optional<Element> Poset::find(std::string_view label) const {
  const auto& labels = rep_->labels;
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return std::nullopt;
  return static_cast<Element>(it - labels.begin());
}

Element Poset::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw PosetError(ErrorCode::unknown_label, "unknown label '" + std::string(label) + "'");
}

ElementSet Poset::set_of(const std::vector<std::string>& labels) const {
  ElementSet s(size());
  for (const auto& l : labels) s.insert(at(l));
  return s;
}

std::vector<std::string> Poset::labels_of(const std::vector<Element>& elems) const {
  std::vector<std::string> out;
  out.reserve(elems.size());
  for (Element e : elems) out.push_back(label(e));
  return out;
}

bool Poset::covers(Element x, Element y) const {
  const auto& uc = rep_->upper_covers[x];
  return std::binary_search(uc.begin(), uc.end(), y);
}

ElementSet Poset::up(Element x) const {
  ElementSet s = rep_->up[x];
  s.insert(x);
  return s;
}

ElementSet Poset::down(Element x) const {
  ElementSet s = rep_->down[x];
  s.insert(x);
  return s;
}

std::vector<ElementPair> Poset::cover_pairs() const {
  std::vector<ElementPair> out;
  for (Element x = 0; x < size(); ++x)
    for (Element y : rep_->upper_covers[x]) out.emplace_back(x, y);
  return out;
}

std::vector<ElementPair> Poset::relations() const {
  std::vector<ElementPair> out;
  for (Element x = 0; x < size(); ++x) rep_->up[x].for_each([&](Element y) { out.emplace_back(x, y); });
  return out;
}

std::size_t Poset::relation_count() const {
  std::size_t n = 0;
  for (const auto& s : rep_->up) n += s.size();
  return n;
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (is_minimal(x)) out.push_back(x);
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (is_maximal(x)) out.push_back(x);
  return out;
}

std::vector<std::size_t> Poset::heights() const {
  // Process by increasing size of the strict down-set: a topological order.
  std::vector<Element> order(size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return rep_->down[a].size() < rep_->down[b].size();
  });
  std::vector<std::size_t> h(size(), 0);
  for (Element y : order)
    for (Element x : rep_->lower_covers[y]) h[y] = std::max(h[y], h[x] + 1);
  return h;
}

ElementSet Poset::interval(Element x, Element y) const {
  check_element(x);
  check_element(y);
  if (!leq(x, y)) return ElementSet(size());
  return up(x) & down(y);
}

bool Poset::is_chain(const ElementSet& s) const {
  if (s.empty()) throw PosetError(ErrorCode::empty_set, "a chain must be nonempty");
  bool ok = true;
  s.for_each([&](Element x) {
    if (ok && !(s - up(x) - down(x)).empty()) ok = false;
  });
  return ok;
}

bool Poset::is_convex(const ElementSet& s) const {
  if (s.empty()) throw PosetError(ErrorCode::empty_set, "convexity is checked on nonempty sets");
  // For x <= y in s, [x, y] is in s iff nothing strictly above x and strictly
  // below some member of s escapes s.
  bool ok = true;
  s.for_each([&](Element x) {
    if (!ok) return;
    ElementSet below_members(size());
    (s & rep_->up[x]).for_each([&](Element y) { below_members |= rep_->down[y]; });
    if (!((rep_->up[x] & below_members) - s).empty()) ok = false;
  });
  return ok;
}

bool Poset::is_saturated_chain(const ElementSet& s) const {
  Chain c = as_chain(s);
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!covers(c[i], c[i + 1])) return false;
  return true;
}

Chain Poset::as_chain(const ElementSet& s) const {
  Chain c = s.elements();
  std::sort(c.begin(), c.end(), [&](Element a, Element b) { return less(a, b); });
  return c;
}

namespace {

// Appends every saturated path from `from` that ends at an element accepted by
// `is_end`, following upper covers that satisfy `allowed`.
template <typename Allowed, typename IsEnd>
void saturated_paths(const Poset& p, Element from, Allowed allowed, IsEnd is_end,
                     std::vector<Chain>& out) {
  Chain path{from};
  std::vector<std::size_t> next{0};
  while (!path.empty()) {
    Element v = path.back();
    if (next.back() == 0 && is_end(v)) {
      out.push_back(path);
      path.pop_back();
      next.pop_back();
      continue;
    }
    const auto& uc = p.upper_covers(v);
    std::size_t& i = next.back();
    while (i < uc.size() && !allowed(uc[i])) ++i;
    if (i == uc.size()) {
      path.pop_back();
      next.pop_back();
      continue;
    }
    Element w = uc[i++];
    path.push_back(w);
    next.push_back(0);
  }
}

}  // namespace

std::vector<Chain> Poset::maximal_chains() const {
  std::vector<Chain> out;
  for (Element m : minimal_elements())
    saturated_paths(
        *this, m, [](Element) { return true; },
        [&](Element v) { return is_maximal(v); }, out);
  return out;
}

std::vector<Chain> Poset::maximal_chains_in_interval(Element x, Element y) const {
  check_element(x);
  check_element(y);
  if (!leq(x, y))
    throw PosetError(ErrorCode::not_comparable,
                     "'" + label(x) + "' is not below '" + label(y) + "'");
  std::vector<Chain> out;
  const ElementSet& below_y = rep_->down[y];
  saturated_paths(
      *this, x, [&](Element w) { return w == y || below_y.contains(w); },
      [&](Element v) { return v == y; }, out);
  return out;
}

Poset Poset::induced_subposet(const ElementSet& q) const {
  if (q.empty()) throw PosetError(ErrorCode::empty_set, "subposet of the empty set");
  std::vector<Element> members = q.elements();
  for (Element e : members) check_element(e);
  std::vector<std::string> names;
  std::vector<ElementPair> pairs;
  for (Element i = 0; i < members.size(); ++i) {
    names.push_back(rep_->labels[members[i]]);
    for (Element j = 0; j < members.size(); ++j)
      if (less(members[i], members[j])) pairs.emplace_back(i, j);
  }
  // Labels stay sorted, so from_indexed keeps the relative indices.
  return from_indexed(std::move(names), pairs);
}

Poset Poset::opposite() const {
  auto rep = std::make_shared<Rep>(*rep_);
  std::swap(rep->up, rep->down);
  std::swap(rep->upper_covers, rep->lower_covers);
  Poset p;
  p.rep_ = std::move(rep);
  return p;
}

std::optional<Element> Poset::meet(Element a, Element b) const {
  check_element(a);
  check_element(b);
  ElementSet lower = down(a) & down(b);
  std::optional<Element> best;
  lower.for_each([&](Element m) {
    if (!best && lower.is_subset_of(down(m))) best = m;
  });
  return best;
}

std::optional<Element> Poset::join(Element a, Element b) const {
  check_element(a);
  check_element(b);
  ElementSet upper = up(a) & up(b);
  std::optional<Element> best;
  upper.for_each([&](Element m) {
    if (!best && upper.is_subset_of(up(m))) best = m;
  });
  return best;
}

bool Poset::is_conditionally_complete() const {
  for (Element a = 0; a < size(); ++a) {
    for (Element b = a + 1; b < size(); ++b) {
      if ((down(a) & down(b)).empty() == false && !meet(a, b)) return false;
      if ((up(a) & up(b)).empty() == false && !join(a, b)) return false;
    }
  }
  return true;
}

bool Poset::is_filtered_upset(const ElementSet& s) const {
  std::vector<Element> members = s.elements();
  for (Element x : members) {
    check_element(x);
    if (!rep_->up[x].is_subset_of(s)) return false;
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!(down(members[i]) & down(members[j])).intersects(s)) return false;
  return true;
}

}  // namespace posetprune
