"""Matching primitives: maximum matchings, maximal-matching enumeration,
perfect matchings of induced subgraphs, factor-criticality, randomly
matchable graphs, isolating matchings and Hall violators.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import (
    DisconnectedGraphError,
    Graph,
    bits,
    complete_bipartite_params,
    independent_set_masks,
    is_complete,
    is_connected,
    popcount,
    to_mask,
)

# above this order perfect-matching queries go through the blossom routine
# instead of the memoized subset recursion
_MEMO_LIMIT = 24


class InconsistencyError(AssertionError):
    """Two independent decision routes disagreed; always a bug or a counterexample."""


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Matching:
    host: Graph
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        seen = 0
        for u, v in self.edges:
            if u >= v:
                raise ValueError(f"edge ({u}, {v}) must be stored as (min, max)")
            if not self.host.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the host graph")
            if seen >> u & 1 or seen >> v & 1:
                raise ValueError(f"edge ({u}, {v}) shares an endpoint with another edge")
            seen |= (1 << u) | (1 << v)

    @classmethod
    def of(cls, host: Graph, edges: Iterable[tuple[int, int]]) -> Matching:
        return cls(host, frozenset(_edge(u, v) for u, v in edges))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        m = 0
        for u, v in self.edges:
            m |= (1 << u) | (1 << v)
        return m

    def saturates(self, v: int) -> bool:
        return bool(self.vertex_mask >> v & 1)

    def exposed(self) -> list[int]:
        return list(bits(self.host.full_mask & ~self.vertex_mask))

    def is_maximal(self) -> bool:
        free = self.host.full_mask & ~self.vertex_mask
        return all(not (self.host.adj[v] & free) for v in bits(free))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_json(self) -> list[str]:
        return [f"{u}-{v}" for u, v in self.sorted_edges()]


# -- maximum matching (Edmonds) ----------------------------------------------


def _augment(root: int, nbrs: list[list[int]], match: list[int]) -> bool:
    """Grow an alternating tree from free ``root``; flip the path if one is found."""
    n = len(match)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] < 0:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                cur = lca(v, to)
                blossom = [False] * n
                mark(v, cur, to, blossom)
                mark(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] < 0:
                parent[to] = v
                if match[to] < 0:
                    while to >= 0:
                        pv = parent[to]
                        nxt = match[pv]
                        match[to], match[pv] = pv, to
                        to = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def _blossom_mates(g: Graph, mask: int | None = None) -> list[int]:
    """Mate array of a maximum matching of ``g[mask]`` (-1 for exposed / outside)."""
    within = g.full_mask if mask is None else mask
    nbrs = [list(bits(g.adj[v] & within)) if within >> v & 1 else [] for v in range(g.n)]
    match = [-1] * g.n
    for v in bits(within):
        if match[v] < 0:
            for u in nbrs[v]:
                if match[u] < 0:
                    match[v], match[u] = u, v
                    break
    for root in bits(within):
        if match[root] < 0:
            _augment(root, nbrs, match)
    return match


def maximum_matching(g: Graph) -> Matching:
    mates = _blossom_mates(g)
    return Matching.of(g, [(v, u) for v, u in enumerate(mates) if u > v])


def max_matching_size(g: Graph) -> int:
    """nu(g), the size of a maximum matching."""
    return sum(1 for v, u in enumerate(_blossom_mates(g)) if u > v)


def max_matching_size_mask(g: Graph, mask: int) -> int:
    return sum(1 for v, u in enumerate(_blossom_mates(g, mask)) if u > v)


# -- perfect matchings of induced subgraphs ----------------------------------


def _pm_memo(g: Graph, mask: int) -> bool:
    memo = g._memo
    r = memo.get(mask)
    if r is not None:
        return r
    if popcount(mask) & 1:
        memo[mask] = False
        return False
    low = mask & -mask
    rest = mask ^ low
    cand = g.adj[low.bit_length() - 1] & rest
    res = False
    while cand:
        b = cand & -cand
        nxt = rest ^ b
        if not nxt or _pm_memo(g, nxt):
            res = True
            break
        cand ^= b
    memo[mask] = res
    return res


def has_perfect_matching_mask(g: Graph, mask: int) -> bool:
    """True iff ``g[mask]`` has a perfect matching (the empty graph does)."""
    if not mask:
        return True
    if popcount(mask) & 1:
        return False
    if g.n <= _MEMO_LIMIT:
        return _pm_memo(g, mask)
    mates = _blossom_mates(g, mask)
    return all(mates[v] >= 0 for v in bits(mask))


def perfect_matching_mask(g: Graph, mask: int) -> Matching | None:
    """A perfect matching of ``g[mask]`` (lexicographically first choices), or None."""
    if not has_perfect_matching_mask(g, mask):
        return None
    if g.n > _MEMO_LIMIT:
        mates = _blossom_mates(g, mask)
        return Matching.of(g, [(v, u) for v in bits(mask) if (u := mates[v]) > v])
    edges = []
    rest = mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        for u in bits(g.adj[v] & rest):
            if has_perfect_matching_mask(g, rest & ~(1 << u)):
                edges.append((v, u))
                rest &= ~(1 << u)
                break
    return Matching.of(g, edges)


def has_perfect_matching(g: Graph) -> bool:
    return has_perfect_matching_mask(g, g.full_mask)


def saturating_matching(g: Graph, target: int, within: int | None = None) -> Matching | None:
    """A matching of ``g[within]`` covering every vertex of ``target``, or None.

    Reduces to a perfect matching question: the optional vertices of
    ``within`` are joined to a clique of padding vertices that absorbs
    whichever of them stay unmatched (one extra pad fixes the parity).
    """
    region = g.full_mask if within is None else within
    if target & ~region:
        raise ValueError("target must lie inside the search region")
    n = g.n
    optional = list(bits(region & ~target))
    pads = len(optional) + (popcount(target) & 1)
    pad_ids = list(range(n, n + pads))
    nbrs = [list(bits(g.adj[v] & region)) if region >> v & 1 else [] for v in range(n)]
    for r in optional:
        nbrs[r].extend(pad_ids)
    for x in pad_ids:
        nbrs.append([y for y in pad_ids if y != x] + optional)
    match = [-1] * (n + pads)
    for root in [*bits(region), *pad_ids]:
        if match[root] < 0 and not _augment(root, nbrs, match):
            return None
    return Matching.of(g, [(v, u) for v in bits(region) if v < (u := match[v]) < n])


def perfect_matching_avoiding(g: Graph, excluded: Iterable[int]) -> Matching | None:
    """A perfect matching of ``g - excluded`` if one exists."""
    return perfect_matching_mask(g, g.full_mask & ~to_mask(excluded))


def is_factor_critical(g: Graph) -> bool:
    """n odd and g - v has a perfect matching for every vertex v."""
    if g.n % 2 == 0:
        return False
    full = g.full_mask
    return all(has_perfect_matching_mask(g, full & ~(1 << v)) for v in range(g.n))


# -- maximal matchings ----------------------------------------------------------


def iter_maximal_matchings(g: Graph) -> Iterator[Matching]:
    """Every inclusion-maximal matching of ``g`` exactly once, deterministically.

    Depth-first branching on the least undecided vertex that still has an
    undecided neighbor: it is matched to each such neighbor in turn, or left
    exposed when none of its neighbors was already left exposed. Vertices left
    exposed must have all their neighbors matched eventually; branches where
    that has become impossible are cut.
    """
    adj = g.adj
    chosen: list[tuple[int, int]] = []

    def feasible(free: int, exposed: int) -> bool:
        need = 0
        for x in bits(exposed):
            need |= adj[x]
        need &= free
        return all(adj[y] & free for y in bits(need))

    def rec(free: int, exposed: int) -> Iterator[Matching]:
        u = -1
        for v in bits(free):
            if adj[v] & free:
                u = v
                break
        if u < 0:
            # whatever is left stays exposed; it must not touch another exposed vertex
            if all(not (adj[x] & (exposed | free)) for x in bits(exposed)):
                yield Matching.of(g, chosen)
            return
        rest = free & ~(1 << u)
        for w in bits(adj[u] & rest):
            nf = rest & ~(1 << w)
            if feasible(nf, exposed):
                chosen.append((u, w))
                yield from rec(nf, exposed)
                chosen.pop()
        if not adj[u] & exposed and feasible(rest, exposed | (1 << u)):
            yield from rec(rest, exposed | (1 << u))

    yield from rec(g.full_mask, 0)


@dataclass(frozen=True)
class MaximalSizes:
    sizes: frozenset[int]
    witnesses: dict[int, Matching]


def maximal_matching_sizes(g: Graph, short_circuit: bool = False, method: str = "exposed") -> MaximalSizes:
    """Sizes attained by inclusion-maximal matchings, one witness per size.

    ``method="exposed"`` uses the fact that M is maximal iff its exposed
    vertices form an independent set X and M is a perfect matching of g - X;
    ``method="enumerate"`` walks :func:`iter_maximal_matchings`. With
    ``short_circuit`` the search stops once two distinct sizes are known.
    """
    witnesses: dict[int, Matching] = {}
    if method == "enumerate":
        for mm in iter_maximal_matchings(g):
            witnesses.setdefault(len(mm), mm)
            if short_circuit and len(witnesses) >= 2:
                break
        return MaximalSizes(frozenset(witnesses), witnesses)
    if method != "exposed":
        raise ValueError(f"unknown method {method!r}")
    full = g.full_mask
    best = maximum_matching(g)
    nu = len(best)
    witnesses[nu] = best
    parity = g.n & 1
    for x in independent_set_masks(g):
        k = popcount(x)
        if k & 1 != parity:
            continue
        size = (g.n - k) // 2
        if size in witnesses or size > nu:
            continue
        if has_perfect_matching_mask(g, full & ~x):
            pm = perfect_matching_mask(g, full & ~x)
            assert pm is not None
            witnesses[size] = pm
            if short_circuit:
                break
    return MaximalSizes(frozenset(witnesses), dict(sorted(witnesses.items())))


def exposed_set_sizes(g: Graph) -> set[int]:
    """Sizes of exposed sets over all maximal matchings."""
    return {g.n - 2 * s for s in maximal_matching_sizes(g).sizes}


def weak_witness(g: Graph, v: int) -> Matching | None:
    """A maximal matching leaving ``v`` exposed, if any."""
    full = g.full_mask
    rest = full & ~(1 << v) & ~g.adj[v]
    for x in independent_set_masks(g, rest):
        x |= 1 << v
        if has_perfect_matching_mask(g, full & ~x):
            return perfect_matching_mask(g, full & ~x)
    return None


# -- randomly matchable --------------------------------------------------------


def is_randomly_matchable(g: Graph, check_definition: bool = True) -> bool:
    """Connected g is randomly matchable iff it is K_{2n} or K_{n,n}.

    For n <= 10 the definition (every maximal matching is perfect, so every
    matching extends to a perfect one) is evaluated as well and must agree.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("randomly matchable test requires a connected graph")
    if g.n == 0:
        return True
    bip = complete_bipartite_params(g)
    classified = (is_complete(g) and g.n % 2 == 0) or (bip is not None and bip[0] == bip[1])
    if check_definition and g.n <= 10:
        by_definition = g.n % 2 == 0 and all(2 * len(mm) == g.n for mm in iter_maximal_matchings(g))
        if by_definition != classified:
            raise InconsistencyError(
                f"randomly matchable: definition says {by_definition}, classification says {classified}"
            )
    return classified


# -- isolating matchings ----------------------------------------------------------


def iter_minimal_isolating_matchings(g: Graph, v: int) -> Iterator[Matching]:
    """Inclusion-minimal matchings M with N(v) inside V(M) and v outside V(M).

    Minimality means every edge of M covers a neighbor of v, so the search
    matches the least uncovered neighbor of v to each available partner.
    """
    target = g.adj[v]
    avail_all = g.full_mask & ~(1 << v)
    chosen: list[tuple[int, int]] = []

    def rec(avail: int, todo: int) -> Iterator[Matching]:
        if not todo:
            yield Matching.of(g, chosen)
            return
        low = todo & -todo
        x = low.bit_length() - 1
        rest = avail & ~low
        for y in bits(g.adj[x] & rest):
            chosen.append((x, y))
            yield from rec(rest & ~(1 << y), todo & ~low & ~(1 << y))
            chosen.pop()

    # each edge set is reached once: the partner of the least open neighbor is unique
    yield from rec(avail_all, target)


def isolating_matching(g: Graph, v: int) -> Matching | None:
    """First minimal matching isolating ``v`` in the deterministic search order."""
    for mm in iter_minimal_isolating_matchings(g, v):
        return mm
    return None


def is_minimal_isolating(g: Graph, v: int, mm: Matching) -> bool:
    target = g.adj[v]
    vm = mm.vertex_mask
    if vm >> v & 1 or target & ~vm:
        return False
    for e in mm.edges:
        reduced = Matching(g, mm.edges - {e})
        if not target & ~reduced.vertex_mask:
            return False
    return True


# -- Hall ---------------------------------------------------------------------------


def hall_violator(g: Graph, side: Iterable[int]) -> frozenset[int] | None:
    """A set S inside ``side`` with |N(S)| < |S|, or None when ``side`` can be saturated.

    The returned set is the union of all side vertices reachable by
    alternating paths from side vertices left free by a maximum matching,
    which is the maximum-deficiency set.
    """
    a = to_mask(side)
    if not g.is_independent(bits(a)):
        raise ValueError("side must be an independent set")
    mate: dict[int, int] = {}

    def try_kuhn(x: int, seen: set[int]) -> bool:
        for y in bits(g.adj[x]):
            if y in seen:
                continue
            seen.add(y)
            if y not in mate or try_kuhn(mate[y], seen):
                mate[y] = x
                return True
        return False

    for x in bits(a):
        try_kuhn(x, set())
    matched = {x: y for y, x in mate.items()}
    free = [x for x in bits(a) if x not in matched]
    if not free:
        mm = Matching.of(g, matched.items())
        if a & ~mm.vertex_mask:
            raise InconsistencyError("Hall: no violator found but side is not saturated")
        return None
    reach = set(free)
    stack = list(free)
    while stack:
        x = stack.pop()
        for y in bits(g.adj[x]):
            z = mate.get(y)
            if z is not None and z not in reach:
                reach.add(z)
                stack.append(z)
    s = frozenset(reach)
    if popcount(g.neighborhood(s)) >= len(s):
        raise InconsistencyError("Hall: reachable set is not deficient")
    return s
