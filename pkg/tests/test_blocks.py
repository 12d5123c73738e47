from hypothesis import given, strategies as st

from twsolve import blocks
from twsolve.families import (
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from twsolve.graph import min_vertex

from conftest import connected_graphs, mask


def test_full_components():
    c4 = cycle_graph(4)
    assert blocks.full_components(c4, mask(0, 2)) == [mask(1), mask(3)]
    p3 = path_graph(3)
    assert blocks.full_components(p3, mask(1)) == [mask(0), mask(2)]
    # {1,2} is the single component and its neighborhood is exactly {0}
    assert blocks.full_components(p3, mask(0)) == [mask(1, 2)]


def test_is_minimal_separator():
    c4 = cycle_graph(4)
    assert blocks.is_minimal_separator(c4, mask(0, 2))
    p3 = path_graph(3)
    assert not blocks.is_minimal_separator(p3, mask(0))
    k4 = complete_graph(4)
    for s in range(1, k4.full_mask):
        assert not blocks.is_minimal_separator(k4, s)


def test_is_cliquish():
    c4 = cycle_graph(4)
    assert blocks.is_cliquish(c4, mask(0, 2))
    p3 = path_graph(3)
    assert not blocks.is_cliquish(p3, mask(0, 1, 2))
    p5 = path_graph(5)
    assert blocks.is_cliquish(p5, mask(1, 3))


def test_is_pmc():
    p3 = path_graph(3)
    assert blocks.is_pmc(p3, mask(0, 1))
    c4 = cycle_graph(4)
    assert blocks.is_pmc(c4, mask(0, 1, 2))
    assert not blocks.is_pmc(c4, mask(0, 2))


def test_unconf():
    c4 = cycle_graph(4)
    assert blocks.unconf(c4, mask(0), mask(0, 2)) == [mask(1), mask(3)]
    p5 = path_graph(5)
    assert blocks.unconf(p5, mask(1), mask(1, 3)) == [mask(2), mask(4)]
    k3 = complete_graph(3)
    assert blocks.unconf(k3, mask(0), mask(0, 1, 2)) == []


def test_crib():
    c4 = cycle_graph(4)
    assert blocks.crib(c4, mask(0), mask(0, 2)) == mask(1, 2, 3)
    p5 = path_graph(5)
    assert blocks.crib(p5, mask(1), mask(1, 3)) == mask(2, 3, 4)
    k3 = complete_graph(3)
    assert blocks.crib(k3, mask(0, 1), mask(0, 1, 2)) == mask(2)


def test_is_outbound():
    c4 = cycle_graph(4)
    assert blocks.is_outbound(c4, mask(1))
    assert not blocks.is_outbound(c4, mask(3))
    # neighborhood of {1,2} in the path is not a minimal separator
    p3 = path_graph(3)
    assert blocks.is_outbound(p3, mask(1, 2))


def test_outlet():
    p5 = path_graph(5)
    assert blocks.outlet(p5, mask(1, 3)) == mask(1)
    star = star_graph(3)
    assert blocks.outlet(star, star.full_mask) == 0
    c4 = cycle_graph(4)
    assert blocks.outlet(c4, mask(0, 1, 2)) == 0


def test_support():
    p5 = path_graph(5)
    assert blocks.support(p5, mask(1, 3)) == [mask(2), mask(4)]
    c4 = cycle_graph(4)
    assert blocks.support(c4, mask(0, 1, 2)) == [mask(3)]
    k3 = complete_graph(3)
    assert blocks.support(k3, mask(0, 1, 2)) == []


@given(connected_graphs(max_n=8), st.data())
def test_minimal_separator_has_one_outbound_full_component(g, data):
    s = data.draw(st.integers(min_value=1, max_value=g.full_mask - 1))
    fulls = blocks.full_components(g, s)
    if len(fulls) < 2:
        return
    flags = [blocks.is_outbound(g, c) for c in fulls]
    assert sum(flags) == 1
    # the outbound one contains the smallest vertex over all full components
    outbound = fulls[flags.index(True)]
    assert min_vertex(outbound) == min(min_vertex(c) for c in fulls)


@given(connected_graphs(max_n=8), st.data())
def test_crib_is_full_component(g, data):
    k_set = data.draw(st.integers(min_value=1, max_value=g.full_mask))
    if not blocks.is_cliquish(g, k_set):
        return
    sub = data.draw(st.integers(min_value=0, max_value=k_set))
    s = sub & k_set
    if s == k_set:
        return
    c = blocks.crib(g, s, k_set)
    assert c & (k_set & ~s) == k_set & ~s
    comps = g.components(s)
    assert c in comps
    assert g.open_neighborhood(c) == s


@given(connected_graphs(max_n=8))
def test_outbound_neighborhoods_nest(g):
    for k_set in range(1, g.full_mask + 1):
        if not blocks.is_cliquish(g, k_set):
            continue
        outs = [
            nb
            for c, nb in g.components_with_neighborhoods(k_set)
            if nb != k_set and blocks.is_outbound(g, c)
        ]
        for a in outs:
            for b in outs:
                assert a & ~b == 0 or b & ~a == 0


@given(connected_graphs(max_n=7))
def test_is_pmc_matches_naive_enumeration(g):
    from twsolve.oracle import enumerate_pmcs_naive

    naive = {
        sum(1 << v for v in fs) for fs in enumerate_pmcs_naive(g.n, g.edge_list())
    }
    fast = {s for s in range(1, g.full_mask + 1) if blocks.is_pmc(g, s)}
    assert fast == naive


def test_is_pmc_on_whole_vertex_set():
    # with no components left, the test reduces to being a clique
    assert blocks.is_pmc(complete_graph(4), complete_graph(4).full_mask)
    assert not blocks.is_pmc(cycle_graph(4), cycle_graph(4).full_mask)
