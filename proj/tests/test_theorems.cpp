#include <set>

#include "doctest.h"
#include "posetprune/families.hpp"
#include "posetprune/theorems.hpp"
#include "test_support.hpp"

using namespace posetprune;

TEST_SUITE_BEGIN("theorems");

TEST_CASE("suite holds on the fixtures") {
  std::set<std::string> names;
  for (const auto& prop : theorem_suite()) {
    CHECK(names.insert(prop.name).second);
    for (const auto& [name, p] : fixtures()) {
      CAPTURE(prop.name);
      CAPTURE(name);
      auto failure = prop.check(p, 1);
      CHECK_MESSAGE(!failure, failure.value_or(""));
    }
  }
}

TEST_CASE("small corpus run") {
  auto summary = run_theorem_suite({7, 25, 8});
  CHECK(summary.ok());
  CHECK(summary.posets_checked == fixtures().size() + 25 + 6);
  CHECK(summary.property_runs > summary.posets_checked);
}

TEST_CASE("check corpus is deterministic") {
  auto a = check_corpus({42, 30, 9});
  auto b = check_corpus({42, 30, 9});
  REQUIRE(a.size() == b.size());
  CHECK(std::equal(a.begin(), a.end(), b.begin()));
}

TEST_CASE("shrinking keeps the property failing") {
  Property has_three_chain{"no chain of length 3", 100, [](const Poset& p, std::uint64_t) -> std::optional<std::string> {
                             for (const auto& c : p.maximal_chains())
                               if (c.size() >= 3) return "found";
                             return std::nullopt;
                           }};
  auto start = generate({GenKind::boolean, 3, 0, std::nullopt, {}});
  auto small = shrink_counterexample(start, has_three_chain, 0);
  CHECK(small.size() == 3);
  CHECK(has_three_chain.check(small, 0).has_value());
}

TEST_SUITE_END();
