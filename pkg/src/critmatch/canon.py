"""Canonical labeling by equitable refinement plus individualization search.

Two graphs are isomorphic iff their canonical graph6 strings are equal. The
search explores the individualization tree of the equitable partition, keeps
the leaf with the lexicographically largest adjacency code and prunes sibling
branches with automorphisms discovered along the way (plus the transpositions
of twin vertices, which are known up front).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, emit_graph6

DEFAULT_BUDGET = 200_000


class CanonicalBudgetError(RuntimeError):
    """The search tree exceeded its node budget; no answer is produced."""


@dataclass(frozen=True)
class CanonicalForm:
    graph: Graph
    graph6: str
    # perm[v] is the canonical label of input vertex v
    perm: tuple[int, ...]
    automorphisms: tuple[tuple[int, ...], ...]

    def orbits(self) -> list[frozenset[int]]:
        """Orbits of the group generated by the automorphisms found during search."""
        n = len(self.perm)
        return _orbits(n, self.automorphisms)


def _orbits(n: int, gens: Sequence[Sequence[int]]) -> list[frozenset[int]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, set[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), set()).add(v)
    return [frozenset(s) for s in sorted(groups.values(), key=min)]


def equitable_partition(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells are split by neighbor counts into every current cell; the resulting
    cell order depends only on structure, never on vertex labels.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                key = tuple([(a & m).bit_count() for m in masks])
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for key in sorted(groups):
                    out.append(groups[key])
        if not changed:
            return out
        cells = out


def _twin_transpositions(g: Graph, color: Sequence[int]) -> list[tuple[int, ...]]:
    gens = []
    n = g.n
    adj = g.adj
    for u in range(n):
        for v in range(u + 1, n):
            if color[u] != color[v]:
                continue
            bu = 1 << u
            bv = 1 << v
            if adj[u] & ~bv == adj[v] & ~bu:
                p = list(range(n))
                p[u], p[v] = v, u
                gens.append(tuple(p))
    return gens


def canonical_form(
    g: Graph,
    colors: Sequence[int] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> CanonicalForm:
    """Canonical relabeling of ``g``, optionally respecting a vertex coloring.

    Colored vertices are only ever mapped to vertices of the same color, and
    color classes are ordered by color value in the canonical graph.
    """
    n = g.n
    adj = g.adj
    color = list(colors) if colors is not None else [0] * n
    if len(color) != n:
        raise ValueError("coloring length does not match vertex count")
    if n == 0:
        return CanonicalForm(g, emit_graph6(g), (), ())

    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(color[v], []).append(v)
    start = [by_color[c] for c in sorted(by_color)]

    autos: list[tuple[int, ...]] = _twin_transpositions(g, color)
    best_code: tuple[int, ...] | None = None
    best_order: list[int] = []
    first_code: tuple[int, ...] | None = None
    first_order: list[int] = []
    nodes = 0

    def leaf_code(order: list[int]) -> tuple[int, ...]:
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        code = []
        for v in order:
            a = adj[v]
            row = 0
            while a:
                low = a & -a
                row |= 1 << pos[low.bit_length() - 1]
                a ^= low
            code.append(row)
        return tuple(code)

    def record_auto(stored: list[int], order: list[int]) -> None:
        gamma = [0] * n
        for a, b in zip(stored, order):
            gamma[a] = b
        t = tuple(gamma)
        if any(t[i] != i for i in range(n)):
            autos.append(t)

    def same_orbit(x: int, y: int, prefix: list[int]) -> bool:
        gens = [a for a in autos if all(a[p] == p for p in prefix)]
        if not gens:
            return False
        seen = {x}
        stack = [x]
        while stack:
            z = stack.pop()
            for a in gens:
                w = a[z]
                if w == y:
                    return True
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def dfs(cells: list[list[int]], prefix: list[int]) -> None:
        nonlocal nodes, best_code, best_order, first_code, first_order
        nodes += 1
        if nodes > budget:
            raise CanonicalBudgetError(f"canonical search exceeded {budget} nodes (n={n})")
        cells = equitable_partition(adj, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = leaf_code(order)
            if first_code is None:
                first_code, first_order = code, order
                best_code, best_order = code, order
                return
            if code == first_code:
                record_auto(first_order, order)
            elif code == best_code:
                record_auto(best_order, order)
            elif code > best_code:
                best_code, best_order = code, order
            return
        target = -1
        size = n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                target, size = i, len(c)
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(same_orbit(t, v, prefix) for t in tried):
                continue
            tried.append(v)
            rest = [x for x in cell if x != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            dfs(child, prefix + [v])

    dfs(start, [])
    assert best_code is not None
    perm = [0] * n
    for i, v in enumerate(best_order):
        perm[v] = i
    canon = Graph.trusted(n, best_code)
    return CanonicalForm(canon, emit_graph6(canon), tuple(perm), tuple(autos))


def canonical_graph6(g: Graph) -> str:
    return canonical_form(g).graph6


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_graph6(g) == canonical_graph6(h)
