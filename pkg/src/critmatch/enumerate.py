"""Non-isomorphic connected graphs by canonical augmentation.

A connected graph on n vertices always has a vertex whose deletion leaves it
connected, so every class arises from a connected (n-1)-vertex parent plus a
new vertex joined to a non-empty subset. A child is kept only when the new
vertex lies in the automorphism orbit of a canonically chosen non-cut vertex;
that makes the parent class unique, so duplicates can only come from the same
parent and are removed with a per-parent set.
"""

from __future__ import annotations

import zlib
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .canon import _orbits, canonical_form
from .graph import Graph, cut_vertices, parse_graph6

MAX_ORDER = 10


class EnumerationBoundError(ValueError):
    """Requested order is outside the supported range."""


# vertex lists of every mask on at most MAX_ORDER vertices
_BITS = tuple(tuple(v for v in range(MAX_ORDER) if m >> v & 1) for m in range(1 << MAX_ORDER))


def _connected_within(adj: list[int], within: int) -> bool:
    low = within & -within
    seen = frontier = low
    while frontier:
        nxt = 0
        for v in _BITS[frontier]:
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen == within


def _children(parent: Graph) -> list[str]:
    """Canonical graph6 strings of the accepted one-vertex extensions of ``parent``.

    The designated deletion vertex is a non-cut vertex maximizing
    (degree, sorted neighbor degrees); ties are broken by canonical label.
    """
    k = parent.n
    n = k + 1
    padj = parent.adj
    pdeg = [a.bit_count() for a in padj]
    parent_cuts = cut_vertices(parent)
    full = (1 << n) - 1
    newbit = 1 << k
    out: set[str] = set()
    for d in range(1, k + 1):
        for subset in combinations(range(k), d):
            x = 0
            for u in subset:
                x |= 1 << u
            deg = [pdeg[u] + (x >> u & 1) for u in range(k)]
            # cheap rejection on degree alone, before any cut-vertex work
            if d == 1 and k >= 2:
                cut_mask = 1 << subset[0]
                for c in parent_cuts:
                    cut_mask |= 1 << c
            else:
                cut_mask = -1
            if cut_mask != -1:
                if any(deg[v] > d for v in range(k) if not cut_mask >> v & 1):
                    continue
            adj = [padj[u] | newbit if x >> u & 1 else padj[u] for u in range(k)]
            adj.append(x)
            if cut_mask == -1:
                cut_mask = 0
                for c in parent_cuts:
                    if not _connected_within(adj, full & ~(1 << c)):
                        cut_mask |= 1 << c
                if any(deg[v] > d for v in range(k) if not cut_mask >> v & 1):
                    continue
            deg.append(d)
            mine = sorted(deg[u] for u in _BITS[x])
            tied = [k]
            rejected = False
            for v in range(k):
                if deg[v] != d or cut_mask >> v & 1:
                    continue
                other = sorted(deg[u] for u in _BITS[adj[v]])
                if other > mine:
                    rejected = True
                    break
                if other == mine:
                    tied.append(v)
            if rejected:
                continue
            cf = canonical_form(Graph.trusted(n, tuple(adj)))
            if len(tied) > 1:
                m = max(tied, key=lambda v: cf.perm[v])
                if m != k and not any(m in orb and k in orb for orb in _orbits(n, cf.automorphisms)):
                    continue
            out.add(cf.graph6)
    return sorted(out)


def _shard(args: tuple[tuple[str, ...], int, int]) -> list[str]:
    parents, workers, index = args
    out: list[str] = []
    for s in parents:
        if zlib.crc32(s.encode()) % workers == index:
            out.extend(_children(parse_graph6(s)))
    return out


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("@",)
    return _extend(_level(n - 1), 1)


def _extend(parents: tuple[str, ...], workers: int) -> tuple[str, ...]:
    if workers <= 1:
        found = _shard((parents, 1, 0))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_shard, [(parents, workers, i) for i in range(workers)])
            found = [s for part in parts for s in part]
    return tuple(sorted(found))


def connected_graph6(n: int, workers: int = 1) -> tuple[str, ...]:
    """Canonical graph6 strings of all connected graphs on ``n`` vertices, sorted.

    The result does not depend on ``workers``: shards are fixed by a hash of
    the parent string and merged by sorting.
    """
    if not 1 <= n <= MAX_ORDER:
        raise EnumerationBoundError(f"order must lie in 1..{MAX_ORDER}, got {n}")
    if n == 1 or workers <= 1:
        return _level(n)
    return _extend(_level(n - 1), workers)


def enumerate_connected(n: int, workers: int = 1) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs on n vertices."""
    for s in connected_graph6(n, workers):
        yield parse_graph6(s)
