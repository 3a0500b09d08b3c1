#include <bit>
#include <random>

#include "doctest.h"
#include "posetprune/connectivity.hpp"
#include "posetprune/veins.hpp"
#include "test_support.hpp"

using namespace posetprune;
using testing_support::fixture;

namespace {

ElementSet from_mask(std::size_t n, std::uint32_t mask) {
  ElementSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1U) s.insert(i);
  return s;
}

SetFamily family_of(const Poset& p, const std::vector<Chain>& chains) {
  std::vector<ElementSet> members;
  for (const auto& c : chains) members.push_back(ElementSet::from_range(p.size(), c));
  return SetFamily(p.all(), members);
}

// Axiom checked over every nonempty subfamily sharing a point.
bool subfamily_axiom(std::uint32_t ground, const std::vector<std::uint32_t>& members) {
  if (members.empty()) return false;
  std::uint32_t covered = 0;
  for (auto m : members) covered |= m;
  if (covered != ground) return false;
  const std::uint64_t count = std::uint64_t{1} << members.size();
  for (std::uint64_t pick = 1; pick < count; ++pick) {
    std::uint32_t meet = ground, join = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (((pick >> i) & 1U) == 0) continue;
      meet &= members[i];
      join |= members[i];
    }
    if (meet == 0) continue;
    if (std::find(members.begin(), members.end(), join) == members.end()) return false;
  }
  return true;
}

bool binary_check(std::size_t n, const std::vector<std::uint32_t>& members) {
  std::vector<ElementSet> sets;
  for (auto m : members) sets.push_back(from_mask(n, m));
  return is_connectivity(SetFamily(ElementSet::full(n), sets));
}

}  // namespace

TEST_SUITE_BEGIN("connectivity");

TEST_CASE("is_connectivity examples") {
  ElementSet ground = ElementSet::full(2);
  CHECK(is_connectivity(SetFamily(ground, {ElementSet(2, {0}), ElementSet(2, {1}), ElementSet(2, {0, 1})})));
  CHECK_FALSE(is_connectivity(SetFamily(ground, {ElementSet(2, {0})})));
  CHECK_FALSE(is_connectivity(SetFamily(ground, {})));
  CHECK(is_connectivity(family_of(fixture("Yp"), all_veins(fixture("Yp"), Mode::oracle))));

  // {a,b} and {b,c} overlap but their union is missing
  CHECK_FALSE(is_connectivity(SetFamily(ElementSet::full(3), {ElementSet(3, {0, 1}), ElementSet(3, {1, 2})})));
}

TEST_CASE("member validation") {
  ElementSet ground(3, {0, 1});
  try {
    SetFamily f(ground, {ElementSet(3, {2})});
    FAIL("expected MemberNotSubset");
  } catch (const PosetError& e) {
    CHECK(e.code() == ErrorCode::member_not_subset);
  }
  CHECK_THROWS_AS(SetFamily(ground, {ElementSet(3)}), PosetError);
}

TEST_CASE("point connectedness") {
  CHECK(is_point_connected(family_of(fixture("C3"), all_irreducible_chains(fixture("C3")))));
  CHECK_FALSE(is_point_connected(SetFamily(ElementSet::full(2), {ElementSet::full(2)})));
  CHECK(is_point_connected(family_of(fixture("B3"), all_veins(fixture("B3"), Mode::oracle))));
  try {
    is_point_connected(SetFamily(ElementSet::full(2), {ElementSet(2, {0})}));
    FAIL("expected NotAConnectivity");
  } catch (const PosetError& e) {
    CHECK(e.code() == ErrorCode::not_a_connectivity);
  }
}

TEST_CASE("components") {
  const auto& yp = fixture("Yp");
  auto comps = components(family_of(yp, all_veins(yp, Mode::oracle)));
  std::vector<std::vector<std::string>> got;
  for (const auto& c : comps) got.push_back(yp.labels_of(c));
  CHECK(got == std::vector<std::vector<std::string>>{{"a", "b"}, {"c"}, {"d"}});

  SetFamily singletons(ElementSet::full(3), {ElementSet(3, {0}), ElementSet(3, {1}), ElementSet(3, {2})});
  CHECK(components(singletons).size() == 3);

  const auto& c3 = fixture("C3");
  CHECK(components(family_of(c3, all_veins(c3, Mode::oracle))) == std::vector<ElementSet>{c3.all()});
  CHECK(component_of(family_of(c3, all_veins(c3, Mode::oracle)), 1) == c3.all());
}

TEST_CASE("binary closure equals the subfamily axiom on every family over <= 4 points") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::uint32_t ground = (1U << n) - 1;
    const std::uint32_t candidates = (1U << n) - 1;  // nonempty subsets 1..ground
    for (std::uint32_t fam = 0; fam < (1U << candidates); ++fam) {
      std::vector<std::uint32_t> members;
      for (std::uint32_t s = 1; s <= ground; ++s)
        if ((fam >> (s - 1)) & 1U) members.push_back(s);
      REQUIRE(binary_check(n, members) == subfamily_axiom(ground, members));
    }
  }
}

TEST_CASE("binary closure equals the subfamily axiom on random families over 5 points") {
  std::mt19937_64 rng(2024);
  const std::uint32_t ground = 31;
  int connectivities = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    std::vector<std::uint32_t> members;
    // bias towards connectivities: start from singletons sometimes
    if (trial % 2 == 0)
      for (std::uint32_t i = 0; i < 5; ++i) members.push_back(1U << i);
    const int extra = static_cast<int>(rng() % 10);
    for (int k = 0; k < extra; ++k) {
      std::uint32_t s = static_cast<std::uint32_t>(rng() % 31) + 1;
      if (std::find(members.begin(), members.end(), s) == members.end()) members.push_back(s);
    }
    // close some under pairwise unions to produce positive cases
    if (trial % 3 == 0) {
      bool grew = true;
      while (grew && members.size() < 20) {
        grew = false;
        for (std::size_t i = 0; i < members.size() && !grew; ++i)
          for (std::size_t j = i + 1; j < members.size() && !grew; ++j)
            if ((members[i] & members[j]) != 0 &&
                std::find(members.begin(), members.end(), members[i] | members[j]) == members.end()) {
              members.push_back(members[i] | members[j]);
              grew = true;
            }
      }
    }
    bool expected = subfamily_axiom(ground, members);
    connectivities += expected ? 1 : 0;
    REQUIRE(binary_check(5, members) == expected);
  }
  CHECK(connectivities > 1000);
}

TEST_CASE("component_of is the union through a point and a member") {
  for (const auto& p : random_corpus(17, 80, 8)) {
    auto f = family_of(p, all_veins(p, Mode::oracle));
    auto comps = components(f);
    for (Element x = 0; x < p.size(); ++x) {
      auto c = component_of(f, x);
      CHECK(f.contains(c));
      CHECK(std::count(comps.begin(), comps.end(), c) == 1);
    }
  }
}

TEST_SUITE_END();
