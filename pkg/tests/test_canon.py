from __future__ import annotations

import random

import networkx as nx
import pynauty
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_nx
from critmatch.canon import CanonicalBudgetError, are_isomorphic, canonical_form, canonical_graph6
from critmatch.graph import complete_bipartite, complete_graph, cycle_graph, star_graph
from test_graph import graphs


def nauty_cert(g) -> bytes:
    pg = pynauty.Graph(g.n, adjacency_dict={v: g.neighbors(v) for v in range(g.n)})
    return pynauty.certificate(pg)


def test_examples():
    c7 = cycle_graph(7)
    order = [0, 2, 4, 6, 1, 3, 5]
    relabeled = c7.relabel([order.index(v) for v in range(7)])
    assert canonical_graph6(c7) == canonical_graph6(relabeled)
    assert canonical_graph6(complete_graph(4)) != canonical_graph6(star_graph(3))
    cf = canonical_form(c7)
    assert c7.relabel(cf.perm) == cf.graph


def test_canonical_of_canonical_is_identity(census_upto7):
    for g in census_upto7:
        cf = canonical_form(g)
        again = canonical_form(cf.graph)
        assert again.graph == cf.graph
        assert again.graph6 == cf.graph6


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_permutation_invariance(g, rnd):
    ref = canonical_form(g)
    assert g.relabel(ref.perm) == ref.graph
    for _ in range(20):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_graph6(g.relabel(perm)) == ref.graph6


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9), graphs(max_n=9))
def test_isomorphism_agrees_with_nauty(a, b):
    if a.n != b.n:
        return
    assert are_isomorphic(a, b) == (nauty_cert(a) == nauty_cert(b))


def test_automorphisms_are_automorphisms():
    rng = random.Random(7)
    for g in [cycle_graph(8), complete_bipartite(3, 4), nx_petersen()]:
        cf = canonical_form(g)
        for p in cf.automorphisms:
            assert g.relabel(p) == g
        orbits = cf.orbits()
        pg = pynauty.Graph(g.n, adjacency_dict={v: g.neighbors(v) for v in range(g.n)})
        _, _, _, nauty_orbits, _ = pynauty.autgrp(pg)
        ours = {v: min(o) for o in orbits for v in o}
        # orbits from the generators found can only be finer than the full group's
        for v in range(g.n):
            assert nauty_orbits[v] == nauty_orbits[ours[v]]
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_graph6(g.relabel(perm)) == cf.graph6


def nx_petersen():
    from conftest import from_nx

    return from_nx(nx.petersen_graph())


def test_budget_error_is_explicit():
    with pytest.raises(CanonicalBudgetError):
        canonical_form(nx_petersen(), budget=1)


def test_colored_canonical_form_respects_colors():
    g = cycle_graph(6)
    # color vertex 0 apart; any relabeling that moves the colors along gives the same form
    base = canonical_form(g, colors=[1, 0, 0, 0, 0, 0])
    for shift in range(6):
        perm = [(v + shift) % 6 for v in range(6)]
        colors = [0] * 6
        colors[perm[0]] = 1
        assert canonical_form(g.relabel(perm), colors=colors).graph6 == base.graph6


def test_colored_forms_separate_inequivalent_colorings():
    def key(colors):
        cf = canonical_form(cycle_graph(6), colors=colors)
        return cf.graph6, sorted(cf.perm[v] for v in range(6) if colors[v])

    adjacent = key([1, 1, 0, 0, 0, 0])
    assert adjacent == key([0, 0, 0, 1, 1, 0])
    assert adjacent != key([1, 0, 1, 0, 0, 0])
    assert key([1, 0, 1, 0, 0, 0]) != key([1, 0, 0, 1, 0, 0])
