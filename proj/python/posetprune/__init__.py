"""Finite posets, veins and the pruning order.

Elements are identified by their string labels throughout.
"""

from ._core import (
    Poset,
    PosetError,
    all_veins,
    bridge_edges,
    check,
    coirreducibles,
    cover_inheritance_check,
    doubly_irreducibles,
    fixtures,
    generate,
    irreducibles,
    is_irreducible_chain,
    is_irreducible_via_meet,
    is_vein,
    iterate_prune,
    maximal_veins,
    preservation_report,
    profiles,
    prune,
    pruned_poset,
    pruning_leq,
    star_chain_check,
    strict_veins,
)

__all__ = [
    "Poset",
    "PosetError",
    "all_veins",
    "bridge_edges",
    "check",
    "coirreducibles",
    "cover_inheritance_check",
    "doubly_irreducibles",
    "fixtures",
    "generate",
    "irreducibles",
    "is_irreducible_chain",
    "is_irreducible_via_meet",
    "is_vein",
    "iterate_prune",
    "maximal_veins",
    "preservation_report",
    "profiles",
    "prune",
    "pruned_poset",
    "pruning_leq",
    "star_chain_check",
    "strict_veins",
]
