from __future__ import annotations

import networkx as nx
import pytest

from conftest import connected_counts, from_nx
from critmatch.canon import canonical_graph6
from critmatch.enumerate import EnumerationBoundError, connected_graph6, enumerate_connected
from critmatch.graph import is_connected, parse_graph6

ORACLE = connected_counts(8)


@pytest.mark.parametrize("n", range(1, 9))
def test_counts_match_polya_oracle(n):
    assert len(connected_graph6(n)) == ORACLE[n]


def test_spec_count_examples():
    assert len(connected_graph6(1)) == 1
    assert len(connected_graph6(4)) == 6
    assert len(connected_graph6(7)) == 853


def test_classes_match_graph_atlas():
    # the atlas lists every graph on at most 7 vertices once
    for n in range(1, 8):
        atlas = {canonical_graph6(from_nx(h)) for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)}
        assert set(connected_graph6(n)) == atlas


def test_output_is_canonical_sorted_and_connected():
    for n in range(1, 8):
        out = connected_graph6(n)
        assert list(out) == sorted(set(out))
        for s in out:
            g = parse_graph6(s)
            assert is_connected(g)
            assert canonical_graph6(g) == s


def test_workers_do_not_change_output():
    assert connected_graph6(7, workers=3) == connected_graph6(7)


def test_bounds():
    with pytest.raises(EnumerationBoundError):
        connected_graph6(0)
    with pytest.raises(EnumerationBoundError):
        list(enumerate_connected(11))
