"""Predicates and constructions over separators and potential maximal cliques.

A *full component* associated with a vertex set S is a component C of the
graph minus S whose neighborhood is all of S.  S is a *minimal separator*
when at least two full components are associated with it.  A set is
*cliquish* when every non-adjacent pair inside it shares some component
neighborhood; a *potential maximal clique* (PMC) is a cliquish set with no
full component.

Orientation: a connected set C is *inbound* when some full component
associated with N(C) precedes it (has a smaller minimum vertex), otherwise
*outbound*.  The *outlet* of a cliquish set K is the maximal neighborhood
among its outbound non-full components (empty if there is none), and the
*support* of K is the list of components unconfined to the outlet; support
members are always inbound.
"""

from __future__ import annotations

from .graph import Graph

__all__ = [
    "crib",
    "full_components",
    "is_cliquish",
    "is_minimal_separator",
    "is_outbound",
    "is_pmc",
    "outlet",
    "outlet_and_support",
    "support",
    "unconf",
]


def full_components(g: Graph, s: int) -> list[int]:
    """Components associated with ``s`` whose neighborhood equals ``s``."""
    return [c for c, nb in g.components_with_neighborhoods(s) if nb == s]


def first_full_component(g: Graph, s: int) -> int:
    """The full component of ``s`` with the smallest minimum vertex, or 0."""
    for c, nb in g.components_with_neighborhoods(s):
        if nb == s:
            return c
    return 0


def is_minimal_separator(g: Graph, s: int) -> bool:
    count = 0
    for c, nb in g.components_with_neighborhoods(s):
        if nb == s:
            count += 1
            if count == 2:
                return True
    return False


def is_cliquish(g: Graph, k_set: int, comp_nbs: list[int] | None = None) -> bool:
    """True iff every non-adjacent pair in ``k_set`` lies in some component neighborhood.

    ``comp_nbs`` may carry precomputed neighborhoods of the components
    associated with ``k_set``.
    """
    if comp_nbs is None:
        comp_nbs = [nb for _, nb in g.components_with_neighborhoods(k_set)]
    adj = g.adj
    rem = k_set
    while rem:
        b = rem & -rem
        rem ^= b
        u = b.bit_length() - 1
        need = k_set & ~adj[u] & ~b
        if not need:
            continue
        covered = 0
        for nb in comp_nbs:
            if nb & b:
                covered |= nb
        if need & ~covered:
            return False
    return True


def is_pmc(g: Graph, k_set: int) -> bool:
    """Potential maximal clique test: no full component and cliquish."""
    comp_nbs = []
    for _, nb in g.components_with_neighborhoods(k_set):
        if nb == k_set:
            return False
        comp_nbs.append(nb)
    return is_cliquish(g, k_set, comp_nbs)


def unconf(g: Graph, s: int, k_set: int) -> list[int]:
    """Components associated with ``k_set`` whose neighborhood is not inside ``s``."""
    return [c for c, nb in g.components_with_neighborhoods(k_set) if nb & ~s]


def crib(g: Graph, s: int, k_set: int) -> int:
    """The full component of ``s`` absorbing ``k_set - s`` and all unconfined components.

    Requires ``k_set`` cliquish and ``s`` a proper subset of it; the result is
    then a full component associated with ``s``.
    """
    assert s & ~k_set == 0 and s != k_set, "crib requires s to be a proper subset"
    assert is_cliquish(g, k_set), "crib requires a cliquish set"
    c = k_set & ~s
    for comp, nb in g.components_with_neighborhoods(k_set):
        if nb & ~s:
            c |= comp
    return c


def is_outbound(g: Graph, c: int) -> bool:
    """True iff no full component associated with N(c) precedes ``c``.

    Equivalently ``c`` is the first full component of its own neighborhood;
    if N(c) is not a minimal separator this holds vacuously.
    """
    return first_full_component(g, g.open_neighborhood(c)) == c


def outlet_and_support(
    g: Graph,
    k_set: int,
    comps_nbs: list[tuple[int, int]] | None = None,
    debug: bool = False,
) -> tuple[int, list[int]]:
    """Outlet of a cliquish set together with its support components."""
    if comps_nbs is None:
        comps_nbs = g.components_with_neighborhoods(k_set)
    out = 0
    for c, nb in comps_nbs:
        if nb == k_set:
            continue
        # outbound iff c is the first full component of its own neighborhood
        if first_full_component(g, nb) == c:
            if debug and out:
                assert out & ~nb == 0 or nb & ~out == 0, (
                    "outbound component neighborhoods must be nested"
                )
            if nb.bit_count() > out.bit_count():
                out = nb
    sup = [c for c, nb in comps_nbs if nb & ~out]
    if out == 0:
        sup = [c for c, _ in comps_nbs]
    return out, sup


def outlet(g: Graph, k_set: int) -> int:
    """Maximal neighborhood among outbound non-full components of ``k_set``, or 0."""
    comps_nbs = g.components_with_neighborhoods(k_set)
    assert not comps_nbs or is_cliquish(g, k_set, [nb for _, nb in comps_nbs]), (
        "outlet requires a cliquish set"
    )
    return outlet_and_support(g, k_set, comps_nbs)[0]


def support(g: Graph, k_set: int) -> list[int]:
    """Components of ``k_set`` unconfined to its outlet, ascending by minimum vertex."""
    comps_nbs = g.components_with_neighborhoods(k_set)
    assert not comps_nbs or is_cliquish(g, k_set, [nb for _, nb in comps_nbs]), (
        "support requires a cliquish set"
    )
    return outlet_and_support(g, k_set, comps_nbs)[1]
