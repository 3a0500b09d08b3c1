#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace posetprune {

/// Index of an element inside a Poset. Indices follow the lexicographic order
/// of labels, so sorting by index is sorting by label.
using Element = std::size_t;

/// Fixed-universe bitset over element indices [0, universe).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members)
      : ElementSet(universe) {
    for (Element e : members) insert(e);
  }

  template <typename Range>
  static ElementSet from_range(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (Element e : members) s.insert(e);
    return s;
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (Element e = 0; e < universe; ++e) s.insert(e);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  void insert(Element e) { words_[e / 64] |= std::uint64_t{1} << (e % 64); }
  void erase(Element e) { words_[e / 64] &= ~(std::uint64_t{1} << (e % 64)); }
  bool contains(Element e) const {
    return e < universe_ && ((words_[e / 64] >> (e % 64)) & 1U) != 0;
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  /// Members in increasing index order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  bool operator==(const ElementSet&) const = default;

  /// Canonical total order: compares the sorted member lists
  /// lexicographically, which is what users see when families are printed.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    return a.elements() < b.elements();
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  // one inline word covers posets up to 64 elements without allocating
  boost::container::small_vector<std::uint64_t, 1> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace posetprune
