from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_maximal_sizes, brute_nu, to_nx
from critmatch.graph import (
    DisconnectedGraphError,
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
    to_mask,
)
from critmatch.matching import (
    Matching,
    has_perfect_matching,
    hall_violator,
    is_factor_critical,
    is_minimal_isolating,
    is_randomly_matchable,
    isolating_matching,
    iter_maximal_matchings,
    iter_minimal_isolating_matchings,
    max_matching_size,
    maximal_matching_sizes,
    maximum_matching,
    perfect_matching_avoiding,
    saturating_matching,
)
from test_graph import graphs


def test_nu_examples():
    assert max_matching_size(complete_graph(4)) == 2
    assert max_matching_size(cycle_graph(7)) == 3
    assert max_matching_size(star_graph(3)) == 1


def test_nu_matches_brute_force(census_upto7):
    for g in census_upto7:
        assert max_matching_size(g) == brute_nu(g.edges), str(g)


@settings(max_examples=150)
@given(graphs(max_n=16))
def test_nu_matches_networkx(g):
    mm = maximum_matching(g)
    assert len(mm) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


def test_maximal_sizes_examples():
    assert maximal_matching_sizes(path_graph(7)).sizes == {2, 3}
    assert maximal_matching_sizes(cycle_graph(7)).sizes == {3}
    assert maximal_matching_sizes(Graph.empty(4)).sizes == {0}


def test_maximal_sizes_match_brute_force(census_upto7):
    for g in census_upto7:
        want = brute_maximal_sizes(g.edges)
        got = maximal_matching_sizes(g)
        assert got.sizes == want, str(g)
        assert min(got.sizes) <= max_matching_size(g) == max(got.sizes)
        for size, mm in got.witnesses.items():
            assert len(mm) == size and mm.is_maximal()


@settings(max_examples=150)
@given(graphs(max_n=9))
def test_enumerator_agrees_with_exposed_method(g):
    seen = [frozenset(mm.edges) for mm in iter_maximal_matchings(g)]
    assert len(seen) == len(set(seen))
    assert all(Matching(g, e).is_maximal() for e in seen)
    assert {len(e) for e in seen} == maximal_matching_sizes(g).sizes
    assert maximal_matching_sizes(g, method="enumerate").sizes == maximal_matching_sizes(g).sizes


@settings(max_examples=80)
@given(graphs(max_n=7))
def test_enumerator_is_complete(g):
    if g.m > 14:
        return
    want = set()
    for k in range(g.m + 1):
        for sub in combinations(g.edges, k):
            used = [x for e in sub for x in e]
            if len(used) == len(set(used)) and Matching.of(g, sub).is_maximal():
                want.add(frozenset(sub))
    assert {frozenset(mm.edges) for mm in iter_maximal_matchings(g)} == want


def test_short_circuit_returns_two_sizes():
    got = maximal_matching_sizes(path_graph(9), short_circuit=True)
    assert len(got.sizes) == 2


def test_perfect_matching_examples():
    assert has_perfect_matching(complete_graph(4))
    pm = perfect_matching_avoiding(complete_graph(4), [])
    assert pm is not None and len(pm) == 2
    c7 = cycle_graph(7)
    pm = perfect_matching_avoiding(c7, [3])
    assert pm is not None and len(pm) == 3 and not pm.saturates(3)
    assert perfect_matching_avoiding(c7, [0, 2, 4]) is None


def test_factor_critical_examples():
    assert is_factor_critical(cycle_graph(7))
    assert is_factor_critical(complete_graph(7))
    assert not is_factor_critical(cycle_graph(4))


@settings(max_examples=100)
@given(graphs(max_n=9, min_n=1))
def test_factor_critical_by_networkx(g):
    h = to_nx(g)
    want = g.n % 2 == 1 and all(
        2 * len(nx.max_weight_matching(h.subgraph(set(h) - {v}), maxcardinality=True)) == g.n - 1 for v in h
    )
    assert is_factor_critical(g) == want
    if want:
        assert nx.is_connected(h)


def test_randomly_matchable_examples():
    assert is_randomly_matchable(complete_bipartite(3, 3))
    assert not is_randomly_matchable(cycle_graph(6))
    assert is_randomly_matchable(complete_graph(2))
    with pytest.raises(DisconnectedGraphError):
        is_randomly_matchable(Graph.empty(2))


def test_randomly_matchable_definition_on_census(census_upto7):
    # the call itself raises when definition and classification disagree
    for g in census_upto7:
        is_randomly_matchable(g)


def test_isolating_examples():
    c7 = cycle_graph(7)
    mm = isolating_matching(c7, 0)
    assert mm is not None and mm.sorted_edges() == [(1, 2), (5, 6)]
    assert isolating_matching(star_graph(3), 0) is None
    k3 = complete_graph(3)
    assert isolating_matching(k3, 0).sorted_edges() == [(1, 2)]


@settings(max_examples=80)
@given(graphs(max_n=8, min_n=1), st.data())
def test_isolating_matchings_are_minimal_and_complete(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    found = {frozenset(mm.edges) for mm in iter_minimal_isolating_matchings(g, v)}
    for e in found:
        assert is_minimal_isolating(g, v, Matching(g, e))
    if g.m <= 12:
        want = set()
        for k in range(g.m + 1):
            for sub in combinations(g.edges, k):
                used = [x for e in sub for x in e]
                if len(used) == len(set(used)) and is_minimal_isolating(g, v, Matching.of(g, sub)):
                    want.add(frozenset(sub))
        assert found == want


def test_hall_examples():
    k13 = star_graph(3)
    assert hall_violator(k13, [1, 2, 3]) == {1, 2, 3}
    k33 = complete_bipartite(3, 3)
    assert hall_violator(k33, [0, 1, 2]) is None
    assert hall_violator(k33, [3, 4, 5]) is None
    k23 = complete_bipartite(2, 3)
    assert hall_violator(k23, [2, 3, 4]) == {2, 3, 4}
    with pytest.raises(ValueError):
        hall_violator(complete_graph(3), [0, 1])


@settings(max_examples=100)
@given(graphs(max_n=9, min_n=1))
def test_hall_violator_certificate(g):
    side = [v for v in range(g.n) if v % 2 == 0]
    side = [v for v in side if all(not g.has_edge(v, u) for u in side if u != v)]
    s = hall_violator(g, side)
    if s is None:
        assert saturating_matching(g, to_mask(side)) is not None
    else:
        assert s <= set(side)
        assert bin(g.neighborhood(s)).count("1") < len(s)


@settings(max_examples=200)
@given(graphs(max_n=8), st.data())
def test_saturating_matching_by_brute_force(g, data):
    target = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    mask = to_mask(target)
    got = saturating_matching(g, mask)
    exists = any(
        target <= {x for e in sub for x in e}
        for k in range(g.n // 2 + 1)
        for sub in combinations(g.edges, k)
        if len({x for e in sub for x in e}) == 2 * k
    )
    assert (got is not None) == exists
    if got is not None:
        assert not mask & ~got.vertex_mask
