#include "doctest.h"
#include "oracles.hpp"
#include "posetprune/families.hpp"
#include "posetprune/irreducibles.hpp"
#include "posetprune/pruning.hpp"
#include "test_support.hpp"

using namespace posetprune;
using testing_support::fixture;
using testing_support::Labels;

TEST_SUITE_BEGIN("irreducibles");

TEST_CASE("irreducible by the filter definition") {
  const auto& c3 = fixture("C3");
  for (Element x = 0; x < c3.size(); ++x) CHECK(is_irreducible(c3, x));
  const auto& b3 = fixture("B3");
  CHECK(is_irreducible(b3, b3.at("{1,2}")));
  CHECK_FALSE(is_irreducible(b3, b3.at("{}")));
  for (const auto& [name, p] : fixtures())
    for (Element m : p.maximal_elements()) CHECK(is_irreducible(p, m));
  CHECK(b3.labels_of(irreducibles(b3)) == Labels{"{1,2,3}", "{1,2}", "{1,3}", "{2,3}"});
}

TEST_CASE("irreducible via meets") {
  const auto& b3 = fixture("B3");
  CHECK(is_irreducible_via_meet(b3, b3.at("{1,2}")));
  CHECK_FALSE(is_irreducible_via_meet(b3, b3.at("{1}")));
  CHECK(is_irreducible_via_meet(fixture("C3"), 1));
  auto bowtie = Poset::from_relations({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  try {
    is_irreducible_via_meet(bowtie, 0);
    FAIL("expected NotConditionallyComplete");
  } catch (const PosetError& e) {
    CHECK(e.code() == ErrorCode::not_conditionally_complete);
  }
}

TEST_CASE("coirreducible") {
  const auto& b3 = fixture("B3");
  CHECK(is_coirreducible(b3, b3.at("{1}")));
  CHECK_FALSE(is_coirreducible(b3, b3.at("{1,2}")));
  const auto& c3 = fixture("C3");
  for (Element x = 0; x < c3.size(); ++x) CHECK(is_coirreducible(c3, x));
  for (const auto& [name, p] : fixtures())
    for (Element m : p.minimal_elements()) CHECK(is_coirreducible(p, m));
}

TEST_CASE("doubly irreducibles") {
  CHECK(doubly_irreducibles(fixture("B3")).empty());
  CHECK(doubly_irreducibles(fixture("C3")) == fixture("C3").all());
  CHECK(doubly_irreducibles(fixture("A2")) == fixture("A2").all());
  const auto& yp = fixture("Yp");
  CHECK(yp.labels_of(doubly_irreducibles(yp)) == Labels{"a", "c", "d"});
}

TEST_CASE("profiles") {
  for (const auto& [name, p] : fixtures())
    for (const auto& prof : profiles(p)) CHECK(prof.doubly == (prof.irreducible && prof.coirreducible));
}

TEST_CASE("filter definition matches brute force on every poset up to 6 elements") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : testing_support::all_posets(n)) {
      oracle::Order o(p);
      oracle::Order op(p.opposite());
      for (Element x = 0; x < p.size(); ++x) {
        REQUIRE(is_irreducible(p, x) == o.is_irreducible(x));
        REQUIRE(is_coirreducible(p, x) == op.is_irreducible(x));
      }
      CHECK(coirreducibles(p) == irreducibles(p.opposite()));
    }
  }
}

TEST_CASE("filter and meet definitions agree on conditionally complete posets") {
  std::size_t complete = 0;
  auto corpus = downset_corpus(3, 100, 6);
  for (auto& p : random_corpus(4, 300, 8)) corpus.push_back(std::move(p));
  for (const auto& p : corpus) {
    if (!p.is_conditionally_complete()) continue;
    ++complete;
    for (Element x = 0; x < p.size(); ++x) CHECK(is_irreducible(p, x) == is_irreducible_via_meet(p, x));
  }
  CHECK(complete > 150);
}

TEST_CASE("preservation report") {
  auto c3 = preservation_report(fixture("C3"));
  CHECK(c3.hypothesis_met);
  CHECK(c3.preserved);
  for (const auto& prof : c3.pruned) CHECK((prof.irreducible && prof.coirreducible));

  auto b3 = preservation_report(fixture("B3"));
  CHECK(b3.preserved);
  CHECK(b3.original == b3.pruned);

  auto lattice = generate({GenKind::downset_lattice, 5, 17, std::nullopt, {}});
  CHECK(preservation_report(lattice, Mode::oracle).preserved);

  auto bowtie = Poset::from_relations({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  CHECK_THROWS_AS(preservation_report(bowtie), PosetError);
  auto explored = preservation_report(bowtie, Mode::fast, false);
  CHECK_FALSE(explored.hypothesis_met);
}

TEST_CASE("irreducibles are preserved on down-set lattices") {
  for (const auto& p : downset_corpus(8, 150, 6)) {
    auto pruned = pruned_poset(p);
    CHECK(irreducibles(p) == irreducibles(pruned));
    CHECK(coirreducibles(p) == coirreducibles(pruned));
    CHECK(doubly_irreducibles(p) == doubly_irreducibles(pruned));
  }
}

TEST_SUITE_END();
