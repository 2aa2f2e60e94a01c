"""Simple undirected graphs on vertices ``0..n-1`` stored as neighbor bitmasks.

Every structural primitive the rest of the package needs lives here:
graph6 and edge-list I/O, components, vertex connectivity, bipartition,
complement, independent sets, line graphs and a handful of structure flags.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class DisconnectedGraphError(ValueError):
    pass


popcount = int.bit_count


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    # matching memo (mask -> bool); purely a cache, excluded from equality
    _memo: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        """Skip validation; for adjacency produced by code that already guarantees it."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "_memo", {})
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(popcount(x) for x in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighborhood(self, vertices: Iterable[int]) -> int:
        """Open neighborhood N(S) as a mask, excluding S itself."""
        s = to_mask(vertices)
        nb = 0
        for v in bits(s):
            nb |= self.adj[v]
        return nb & ~s

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``vertices`` relabeled in increasing order.

        Returns the subgraph and the list mapping new labels to old ones.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            adj.append(to_mask(index[u] for u in bits(self.adj[v]) if u in index))
        return Graph(len(keep), tuple(adj)), keep

    def induced_mask(self, mask: int) -> tuple[Graph, list[int]]:
        return self.induced(bits(mask))

    def remove_vertices(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        drop = to_mask(vertices)
        return self.induced_mask(self.full_mask & ~drop)

    def remove_vertex(self, v: int) -> Graph:
        return self.remove_vertices([v])[0]

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph whose vertex ``perm[v]`` plays the role of old vertex ``v``."""
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = to_mask(perm[u] for u in bits(self.adj[v]))
        return Graph(self.n, tuple(adj))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        s = to_mask(vertices)
        return all(not (self.adj[v] & s) for v in bits(s))

    def __str__(self) -> str:
        return emit_graph6(self)


# -- graph6 -------------------------------------------------------------------


def parse_graph6(text: str | bytes) -> Graph:
    """Parse one short-form graph6 line (n <= 62)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 line", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid character {ch!r}", i)
    n = ord(s[0]) - 63
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count header {n} exceeds {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise Graph6Error(f"truncated bit section: expected {need} bytes, got {len(body)}", 1 + len(body))
    if len(body) > need:
        raise Graph6Error(f"trailing data after {need} bytes of edge bits", 1 + need)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if need and nbits % 6:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("non-zero padding bits", len(s) - 1)
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    n = g.n
    out = [chr(n + 63)]
    acc = 0
    k = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``"n m\\nu v\\n..."`` edge-list format."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("edge list header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    rows = lines[1:]
    if len(rows) != m:
        raise ValueError(f"header announces {m} edges but {len(rows)} follow")
    edges = []
    for ln in rows:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    g = Graph.from_edges(n, edges)
    if g.m != m:
        raise ValueError("duplicate edges in edge list")
    return g


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    """Accept either a graph6 line or an edge list."""
    stripped = text.strip()
    if "\n" not in stripped and " " not in stripped:
        return parse_graph6(stripped)
    return parse_edge_list(text)


def read_graphs(text: str) -> list[Graph]:
    """Read a stream of graph6 lines or of concatenated edge-list blocks."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        return []
    if " " not in lines[0]:
        return [parse_graph6(ln) for ln in lines]
    out = []
    i = 0
    while i < len(lines):
        head = lines[i].split()
        if len(head) != 2:
            raise ValueError(f"edge list header must be 'n m', got {lines[i]!r}")
        m = int(head[1])
        block = lines[i : i + m + 1]
        if len(block) != m + 1:
            raise ValueError(f"header announces {m} edges but the stream ends early")
        out.append(parse_edge_list("\n".join(block)))
        i += m + 1
    return out


# -- named graphs used throughout tests and docs ----------------------------


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_bipartite(p: int, q: int) -> Graph:
    left = (1 << p) - 1
    right = ((1 << q) - 1) << p
    return Graph(p + q, tuple([right] * p + [left] * q))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


# -- connectivity -------------------------------------------------------------


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as masks, ordered by least vertex."""
    rest = g.full_mask if within is None else within
    comps = []
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(g: Graph) -> list[set[int]]:
    return [set(bits(c)) for c in component_masks(g)]


def is_connected_mask(g: Graph, within: int) -> bool:
    if not within:
        return True
    seed = within & -within
    comp = frontier = seed
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= within & ~comp
        comp |= nxt
        frontier = nxt
    return comp == within


def is_connected(g: Graph) -> bool:
    return is_connected_mask(g, g.full_mask)


def _disconnects(g: Graph, removed: int) -> bool:
    rest = g.full_mask & ~removed
    return popcount(rest) >= 2 and not is_connected_mask(g, rest)


def k_cut_sets(g: Graph, k: int) -> list[tuple[int, ...]]:
    """Every k-subset of vertices whose removal disconnects ``g``."""
    return [c for c in combinations(range(g.n), k) if _disconnects(g, to_mask(c))]


def vertex_connectivity(g: Graph) -> int:
    """Smallest k such that removing some k vertices disconnects ``g``.

    Complete graphs get n - 1. Exhaustive over subsets of increasing size.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("vertex connectivity requires a connected graph")
    if g.n <= 1:
        return 0
    min_deg = min(g.degree(v) for v in range(g.n))
    for k in range(min_deg):
        for c in combinations(range(g.n), k):
            if _disconnects(g, to_mask(c)):
                return k
    # removing the neighbors of a minimum-degree vertex always works (or g is complete)
    return min_deg


def cut_vertices(g: Graph) -> list[int]:
    base = len(component_masks(g))
    out = []
    for v in range(g.n):
        rest = g.full_mask & ~(1 << v)
        if len(component_masks(g, rest)) > base:
            out.append(v)
    return out


def is_two_connected(g: Graph) -> bool:
    """Connected, at least three vertices, and no cut vertex."""
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


# -- bipartition ----------------------------------------------------------------


@dataclass(frozen=True)
class Bipartition:
    side_u: frozenset[int]
    side_w: frozenset[int]


def two_coloring(g: Graph) -> list[int] | None:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def bipartition(g: Graph) -> Bipartition | None:
    """Two-coloring with ``|U| <= |W|``; ties go to the lexicographically smaller U."""
    color = two_coloring(g)
    if color is None:
        return None
    a = tuple(v for v in range(g.n) if color[v] == 0)
    b = tuple(v for v in range(g.n) if color[v] == 1)
    if (len(b), b) < (len(a), a):
        a, b = b, a
    return Bipartition(frozenset(a), frozenset(b))


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


# -- complement, independence, cliques ---------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def independent_set_masks(g: Graph, within: int | None = None) -> list[int]:
    """All independent sets of ``g[within]`` (including the empty set) as masks."""
    out = []

    def grow(chosen: int, cand: int) -> None:
        out.append(chosen)
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(chosen | low, cand & ~g.adj[v])

    grow(0, g.full_mask if within is None else within)
    return out


def independent_sets(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Independent sets of size exactly k in lexicographic order."""

    def rec(start: int, chosen: list[int], blocked: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for v in range(start, g.n - (k - len(chosen)) + 1):
            if blocked >> v & 1:
                continue
            chosen.append(v)
            yield from rec(v + 1, chosen, blocked | g.adj[v])
            chosen.pop()

    yield from rec(0, [], 0)


def _max_clique_size(adj: Sequence[int], cand: int) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + popcount(cand) <= best:
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, cand & adj[v])

    expand(0, cand)
    return best


def clique_number(g: Graph) -> int:
    return _max_clique_size(g.adj, g.full_mask)


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def maximal_independent_set_masks(g: Graph, within: int | None = None) -> list[int]:
    """Inclusion-maximal independent sets of ``g[within]`` (Bron-Kerbosch on the complement)."""
    cand = g.full_mask if within is None else within
    out = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # pivot: vertex with most candidates among its non-neighbors
        px = p | x
        pivot = max(bits(px), key=lambda u: popcount(p & ~g.adj[u] & ~(1 << u)))
        for v in bits(p & (g.adj[pivot] | (1 << pivot))):
            nonnb = cand & ~g.adj[v] & ~(1 << v)
            bk(r | (1 << v), p & nonnb, x & nonnb)
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, cand, 0)
    return out


# -- structure flags ----------------------------------------------------------


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def complete_bipartite_params(g: Graph) -> tuple[int, int] | None:
    """``(p, q)`` with p <= q when ``g`` is K_{p,q} (p, q >= 1), else None."""
    if g.n < 2:
        return None
    bp = bipartition(g)
    if bp is None or not is_connected(g):
        return None
    p, q = len(bp.side_u), len(bp.side_w)
    if g.m != p * q:
        return None
    return (p, q)


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adj[u] & g.adj[v]) for u, v in g.edges)


def eccentricities(g: Graph) -> list[int]:
    if not is_connected(g):
        raise DisconnectedGraphError("diameter requires a connected graph")
    ecc = []
    for s in range(g.n):
        seen = frontier = 1 << s
        d = 0
        while True:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
            d += 1
        ecc.append(d)
    return ecc


def diameter(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(eccentricities(g))


def dominating_edges(g: Graph) -> list[tuple[int, int]]:
    """Edges uv whose endpoints dominate the graph, i.e. N({u,v}) = V - {u,v}."""
    full = g.full_mask
    return [(u, v) for u, v in g.edges if (g.adj[u] | g.adj[v] | (1 << u) | (1 << v)) == full]


def is_maximal_triangle_free(g: Graph) -> bool:
    if not is_triangle_free(g):
        return False
    for u, v in combinations(range(g.n), 2):
        if not g.has_edge(u, v) and not (g.adj[u] & g.adj[v]):
            return False
    return True


@dataclass(frozen=True)
class StructureFlags:
    is_complete: bool
    complete_bipartite_params: tuple[int, int] | None
    is_triangle_free: bool
    diameter: int
    has_dominating_edge: bool
    is_maximal_triangle_free: bool


def structure_flags(g: Graph) -> StructureFlags:
    return StructureFlags(
        is_complete=is_complete(g),
        complete_bipartite_params=complete_bipartite_params(g),
        is_triangle_free=is_triangle_free(g),
        diameter=diameter(g),
        has_dominating_edge=bool(dominating_edges(g)),
        is_maximal_triangle_free=is_maximal_triangle_free(g),
    )


# -- line graph -----------------------------------------------------------------


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of ``g`` and the list mapping each new vertex to its edge."""
    edges = g.edges
    if len(edges) > MAX_VERTICES:
        raise ValueError(f"line graph would have {len(edges)} > {MAX_VERTICES} vertices")
    incident: list[int] = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = []
    for i, (u, v) in enumerate(edges):
        adj.append((incident[u] | incident[v]) & ~(1 << i))
    return Graph(len(edges), tuple(adj)), edges
