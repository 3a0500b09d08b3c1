#pragma once

// Brute-force reference implementations used only by the tests. Everything
// here works on subsets encoded as bitmasks and on the reflexive order read
// through Poset::leq, enumerating subsets directly from the definitions.
// Nothing calls into the chain/vein/pruning code under test.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "posetprune/poset.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Order {
  std::size_t n = 0;
  std::vector<std::vector<bool>> le;

  explicit Order(const posetprune::Poset& p) : n(p.size()), le(n, std::vector<bool>(n)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) le[i][j] = p.leq(i, j);
  }

  bool in(Mask m, std::size_t i) const { return ((m >> i) & 1U) != 0; }
  Mask all() const { return n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }
  bool comparable(std::size_t a, std::size_t b) const { return le[a][b] || le[b][a]; }

  bool is_chain(Mask m) const {
    if (m == 0) return false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (in(m, a) && in(m, b) && !comparable(a, b)) return false;
    return true;
  }

  Mask interval(std::size_t x, std::size_t y) const {
    Mask m = 0;
    for (std::size_t z = 0; z < n; ++z)
      if (le[x][z] && le[z][y]) m |= Mask{1} << z;
    return m;
  }

  bool is_convex(Mask m) const {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (in(m, a) && in(m, b) && le[a][b] && (interval(a, b) & ~m) != 0) return false;
    return true;
  }

  // Chains inside `universe` not properly contained in another such chain.
  std::vector<Mask> maximal_chains(Mask universe) const {
    std::vector<Mask> chains;
    for (Mask m = universe;; m = (m - 1) & universe) {
      if (m != 0 && is_chain(m)) chains.push_back(m);
      if (m == 0) break;
    }
    std::vector<Mask> out;
    for (Mask c : chains) {
      bool maximal = true;
      for (Mask d : chains)
        if (d != c && (c & ~d) == 0) maximal = false;
      if (maximal) out.push_back(c);
    }
    return out;
  }

  const std::vector<Mask>& maximal_chains() const {
    if (!whole_) whole_ = maximal_chains(all());
    return *whole_;
  }

  bool is_irreducible_chain(Mask c) const {
    for (Mask m : maximal_chains())
      if ((m & c) != 0 && (c & ~m) != 0) return false;
    return true;
  }

  bool is_vein(Mask c) const { return is_chain(c) && is_convex(c) && is_irreducible_chain(c); }

  const std::vector<Mask>& strict_veins() const {
    if (!strict_) {
      strict_.emplace();
      for (Mask m = 1; m <= all(); ++m)
        if (std::popcount(m) >= 2 && is_vein(m)) strict_->push_back(m);
    }
    return *strict_;
  }

  // x <=* y straight from the definition.
  bool pruning_leq(std::size_t x, std::size_t y) const {
    if (x == y) return true;
    if (!le[x][y]) return false;
    const auto& strict = strict_veins();
    for (Mask m : maximal_chains(interval(x, y))) {
      bool clean = true;
      for (Mask v : strict)
        if ((v & ~m) == 0) clean = false;
      if (clean) return true;
    }
    return false;
  }

  bool is_filter(Mask s) const {
    for (std::size_t a = 0; a < n; ++a) {
      if (!in(s, a)) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (le[a][b] && !in(s, b)) return false;
      for (std::size_t b = 0; b < n; ++b) {
        if (!in(s, b)) continue;
        bool bounded = false;
        for (std::size_t c = 0; c < n; ++c)
          if (in(s, c) && le[c][a] && le[c][b]) bounded = true;
        if (!bounded) return false;
      }
    }
    return true;
  }

  bool is_irreducible(std::size_t x) const {
    Mask above = 0;
    for (std::size_t z = 0; z < n; ++z)
      if (z != x && le[x][z]) above |= Mask{1} << z;
    return above == 0 || is_filter(above);
  }

 private:
  mutable std::optional<std::vector<Mask>> whole_;
  mutable std::optional<std::vector<Mask>> strict_;
};

}  // namespace oracle
