"""Independent oracles shared by the test modules.

Everything here is written against networkx or plain brute force so that it
shares no code with the library under test.
"""

from __future__ import annotations

from itertools import combinations
from math import factorial, gcd

import networkx as nx
import pytest

from critmatch.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def brute_maximal_sizes(edges: list[tuple[int, int]]) -> set[int]:
    """Sizes of inclusion-maximal matchings: branch on taking or skipping each edge."""
    sizes: set[int] = set()

    def rec(i: int, used: frozenset[int], count: int) -> None:
        if i == len(edges):
            if all(u in used or v in used for u, v in edges):
                sizes.add(count)
            return
        u, v = edges[i]
        if u not in used and v not in used:
            rec(i + 1, used | {u, v}, count + 1)
        rec(i + 1, used, count)

    rec(0, frozenset(), 0)
    return sizes


def brute_nu(edges: list[tuple[int, int]]) -> int:
    """Maximum matching size: the least vertex is either skipped or matched to a neighbor."""
    verts = sorted({x for e in edges for x in e})
    nbrs = {v: {u for e in edges for u in e if v in e and u != v} for v in verts}

    def rec(free: frozenset[int]) -> int:
        if not free:
            return 0
        v = min(free)
        best = rec(free - {v})
        for u in nbrs[v] & free:
            best = max(best, 1 + rec(free - {u, v}))
        return best

    return rec(frozenset(verts))


def brute_equimatchable(edges: list[tuple[int, int]]) -> bool:
    return len(brute_maximal_sizes(edges)) == 1


def brute_ece(edges: list[tuple[int, int]]) -> bool:
    if not brute_equimatchable(edges):
        return False
    return all(not brute_equimatchable([f for f in edges if f != e]) for e in edges)


def brute_connectivity(g: Graph) -> int:
    """Smallest vertex subset whose removal disconnects; n - 1 for complete graphs."""
    h = to_nx(g)
    for k in range(g.n - 1):
        for cut in combinations(range(g.n), k):
            rest = h.subgraph(set(range(g.n)) - set(cut))
            if not nx.is_connected(rest):
                return k
    return g.n - 1


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def polya_graph_counts(n_max: int) -> list[int]:
    """Number of unlabeled graphs on n vertices (index n), by Burnside over cycle types."""
    out = [1]
    for n in range(1, n_max + 1):
        total = 0
        for parts in _partitions(n):
            # permutations with this cycle type
            count = factorial(n)
            for k in set(parts):
                c = parts.count(k)
                count //= k**c * factorial(c)
            cycles = sum(k // 2 for k in parts)
            cycles += sum(gcd(a, b) for i, a in enumerate(parts) for b in parts[i + 1 :])
            total += count * 2**cycles
        out.append(total // factorial(n))
    return out


def connected_counts(n_max: int) -> list[int]:
    """Connected unlabeled graph counts by inverting the Euler transform."""
    a = polya_graph_counts(n_max)
    c = [0] * (n_max + 1)
    # a(x) = prod (1 - x^k)^(-c_k); peel off one order at a time
    for n in range(1, n_max + 1):
        series = [1] + [0] * n_max
        for k in range(1, n):
            for _ in range(c[k]):
                for i in range(k, n_max + 1):
                    series[i] += series[i - k]
        c[n] = a[n] - series[n]
    return c


@pytest.fixture(scope="session")
def census_upto7() -> list[Graph]:
    from critmatch.enumerate import enumerate_connected

    return [g for n in range(1, 8) for g in enumerate_connected(n)]


def pytest_terminal_summary(terminalreporter) -> None:
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in range(1, 10):
        line = mod.RESULTS.get(k)
        if line is None and k == 4 and not mod.DEEP:
            line = "criterion 4: SKIPPED - opt-in, set CRITMATCH_DEEP=1"
        if line is not None:
            terminalreporter.write_line(line)
