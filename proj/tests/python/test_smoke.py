import pytest

import posetprune as pp


@pytest.fixture(scope="module")
def fx():
    return pp.fixtures()


def test_construction_and_queries():
    p = pp.Poset(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("b", "d")])
    assert len(p) == 4
    assert p.elements == ["a", "b", "c", "d"]
    assert p.covers() == [("a", "b"), ("b", "c"), ("b", "d")]
    assert p.leq("a", "d") and not p.leq("c", "d")
    assert p.maximal_chains() == [["a", "b", "c"], ["a", "b", "d"]]
    assert p.minimal() == ["a"]


def test_errors():
    with pytest.raises(pp.PosetError) as err:
        pp.Poset(["a", "b"], [("a", "b"), ("b", "a")])
    assert err.value.code == "CycleDetected"
    assert err.value.cycle[0] == err.value.cycle[-1]
    with pytest.raises(pp.PosetError) as err:
        pp.Poset.parse("a < b < c\n")
    assert err.value.line == 1
    with pytest.raises(ValueError):
        pp.generate("random", size=4)


def test_veins(fx):
    assert pp.strict_veins(fx["Yp"]) == [["a", "b"]]
    assert pp.strict_veins(fx["C3"], mode="oracle") == [["a", "b"], ["b", "c"], ["a", "b", "c"]]
    assert pp.strict_veins(fx["B3"]) == []
    assert pp.maximal_veins(fx["Yp"]) == [["a", "b"], ["c"], ["d"]]
    assert pp.bridge_edges(fx["C3"]) == [("a", "b"), ("b", "c")]
    assert pp.is_vein(fx["Yp"], ["a", "b"])
    assert not pp.is_irreducible_chain(fx["B3"], ["{}", "{1}"])


def test_prune(fx):
    report = pp.prune(fx["Yp"])
    assert report["pruned"].relations() == [("b", "c"), ("b", "d")]
    assert report["witnesses"][("b", "c")] == ["b", "c"]
    assert pp.pruned_poset(fx["C3"]).relations() == []
    assert pp.pruned_poset(fx["B3"]) == fx["B3"]
    holds, witness = pp.pruning_leq(fx["C3"], "a", "c")
    assert not holds and witness is None
    seq, fixpoint = pp.iterate_prune(fx["C3"])
    assert fixpoint == 1 and len(seq) == 3
    assert pp.cover_inheritance_check(fx["Yp"], "b", "c")
    assert pp.star_chain_check(fx["Yp"], "b", "d", ["b", "d"])


def test_irreducibles(fx):
    b3 = fx["B3"]
    assert pp.doubly_irreducibles(b3) == []
    assert pp.irreducibles(b3) == ["{1,2,3}", "{1,2}", "{1,3}", "{2,3}"]
    assert pp.coirreducibles(b3) == ["{1}", "{2}", "{3}", "{}"]
    assert pp.is_irreducible_via_meet(b3, "{1,2}")
    assert pp.preservation_report(b3)["preserved"]
    assert pp.profiles(fx["C3"])["b"] == {"irreducible": True, "coirreducible": True, "doubly": True}


def test_generate_and_io():
    a = pp.generate("random", size=9, seed=3, edge_prob=0.4)
    assert a == pp.generate("random", size=9, seed=3, edge_prob=0.4)
    assert pp.Poset.parse(a.to_text()) == a
    assert pp.Poset.parse(a.to_json()) == a
    assert a.to_dot() == a.to_dot()
    b3 = pp.generate("boolean", size=3)
    assert len(b3) == 8 and len(b3.covers()) == 12
    assert pp.generate("downset_lattice", size=4, seed=1).is_conditionally_complete()


def test_check():
    summary = pp.check(seed=42, count=20, max_size=8)
    assert summary["failures"] == []
    assert summary["posets_checked"] > 20
