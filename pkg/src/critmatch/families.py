"""Named graph families: generators, a compact text form, and classifiers.

Descriptors name a family kind plus integer parameters. ``generate`` builds
the graph together with a labeling of its distinguished parts (the cut ``S``,
the two sides ``A`` and ``B``, special vertices), and the classifiers go the
other way, checking every defining clause on a concrete graph.

Text form: ``<kind> key=value ...``, for example ``typeI p=1 q=1 b1=2``,
``famA r=3 deg=4``, ``famE t=1,2 r=3`` or ``typeVIII p=2 q=2 a1=2 parity=even``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Any, Iterator

from .graph import (
    Graph,
    bipartition,
    bits,
    component_masks,
    cut_vertices,
    is_bipartite,
    is_connected,
    k_cut_sets,
    popcount,
    to_mask,
    two_coloring,
    vertex_connectivity,
)
from .matching import InconsistencyError, is_factor_critical
from .properties import is_EFC, is_VCE


class DescriptorError(ValueError):
    """Malformed descriptor text or parameters outside the family's range."""


# kind -> ordered (name, default) pairs; a default of None marks a required parameter
_PARAMS: dict[str, tuple[tuple[str, Any], ...]] = {
    "typeI": (("p", None), ("q", None), ("b1", 1)),
    "typeII": (("p", None), ("q", None), ("b1", 1)),
    "typeIII": (("p", None), ("q", None), ("b1", 1)),
    "typeIV": (("p", None), ("q", None), ("b1", 1)),
    "typeV": (("q", None),),
    "typeVI": (("p", None), ("q", None)),
    "typeVII": (("p", None), ("q", None), ("a1", 1), ("a2", 1)),
    "typeVIII": (("p", None), ("q", None), ("a1", 2), ("parity", "odd")),
    "famA": (("r", None), ("deg", 2)),
    "famB": (("r", None), ("nu", 1), ("nw", 1)),
    "famC": (("r", None), ("minus", 0)),
    "famD": (("r", None), ("nw", 1)),
    "famE": (("t", ()), ("r", ())),
    "clique": (("t", None),),
    "biclique": (("n", None),),
    "nearbiclique": (("p", None),),
}

KINDS = tuple(_PARAMS)
CONN2_KINDS = ("typeI", "typeII", "typeIII", "typeIV", "typeV")
CONN3_KINDS = ("typeVI", "typeVII", "typeVIII")
EFC_LABELS = ("famA", "famB", "famC", "famD", "famE", "VCE")

_LOWER = {k.lower(): k for k in KINDS}


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: str
    params: tuple[tuple[str, Any], ...]

    @classmethod
    def make(cls, kind: str, **params: Any) -> FamilyDescriptor:
        """Build and range-check a descriptor; omitted optional parameters take defaults."""
        key = _LOWER.get(kind.lower())
        if key is None:
            raise DescriptorError(f"unknown family kind {kind!r}")
        spec = _PARAMS[key]
        names = {n for n, _ in spec}
        extra = sorted(set(params) - names)
        if extra:
            raise DescriptorError(f"{key}: unexpected parameter(s) {', '.join(extra)}")
        values = []
        for name, default in spec:
            if name in params:
                val = params[name]
            elif default is None:
                raise DescriptorError(f"{key}: missing parameter {name}")
            else:
                val = default
            if isinstance(val, list):
                val = tuple(val)
            values.append((name, val))
        d = cls(key, tuple(values))
        _validate(d)
        return d

    def __getitem__(self, name: str) -> Any:
        for k, v in self.params:
            if k == name:
                return v
        raise KeyError(name)

    def __str__(self) -> str:
        parts = [self.kind]
        for k, v in self.params:
            if isinstance(v, tuple):
                if v:
                    parts.append(f"{k}={','.join(map(str, v))}")
            else:
                parts.append(f"{k}={v}")
        return " ".join(parts)

    @property
    def order(self) -> int:
        return _order(self)


def parse_descriptor(text: str) -> FamilyDescriptor:
    tokens = text.split()
    if not tokens:
        raise DescriptorError("empty descriptor")
    kind = _LOWER.get(tokens[0].lower())
    if kind is None:
        raise DescriptorError(f"unknown family kind {tokens[0]!r}")
    params: dict[str, Any] = {}
    for tok in tokens[1:]:
        name, eq, raw = tok.partition("=")
        if not eq or not name or not raw:
            raise DescriptorError(f"expected key=value, got {tok!r}")
        if name in params:
            raise DescriptorError(f"parameter {name} given twice")
        if kind == "typeVIII" and name == "parity":
            params[name] = raw
            continue
        try:
            if kind == "famE":
                params[name] = tuple(int(x) for x in raw.split(","))
            else:
                params[name] = int(raw)
        except ValueError:
            raise DescriptorError(f"parameter {name} must be an integer, got {raw!r}") from None
    return FamilyDescriptor.make(kind, **params)


def _need(cond: bool, d: FamilyDescriptor, msg: str) -> None:
    if not cond:
        raise DescriptorError(f"{d.kind}: {msg}")


def _validate(d: FamilyDescriptor) -> None:
    k = d.kind
    vals = dict(d.params)
    for name, v in vals.items():
        if name == "parity":
            _need(v in ("odd", "even"), d, "parity must be odd or even")
        elif isinstance(v, tuple):
            _need(all(isinstance(x, int) for x in v), d, f"{name} must list integers")
        else:
            _need(isinstance(v, int) and not isinstance(v, bool), d, f"{name} must be an integer")
    if k in CONN2_KINDS[:4]:
        p, q, b1 = vals["p"], vals["q"], vals["b1"]
        _need(p >= 1 and q >= 1, d, "p, q >= 1")
        # the partially-complete split lives on B (odd clique) or on its (p+1)-side
        top = 2 * p if k in ("typeI", "typeII") else p
        _need(1 <= b1 <= top, d, f"b1 must lie in 1..{top}")
    elif k == "typeV":
        _need(vals["q"] >= 3, d, "q >= 3")
    elif k == "typeVI":
        _need(vals["p"] >= 1 and vals["q"] >= 1, d, "p, q >= 1")
    elif k == "typeVII":
        p, q, a1, a2 = vals["p"], vals["q"], vals["a1"], vals["a2"]
        _need(p >= 1 and q >= 1, d, "p, q >= 1")
        _need(a1 >= 1 and a2 >= 1 and 2 * p + 1 - a1 - a2 >= 1, d, "A1, A2, A3 must be non-empty")
    elif k == "typeVIII":
        p, q, a1 = vals["p"], vals["q"], vals["a1"]
        low = 1 if vals["parity"] == "odd" else 2
        _need(p >= low and q >= low, d, f"p, q >= {low} for the {vals['parity']} variant")
        size_a = 2 * p + 1 if vals["parity"] == "odd" else 2 * p
        # a single vertex in A_1 would form a 2-cut together with s3
        _need(2 <= a1 <= size_a - 1, d, f"a1 must lie in 2..{size_a - 1}")
    elif k == "famA":
        r, deg = vals["r"], vals["deg"]
        _need(r >= 2, d, "r >= 2")
        _need(2 <= deg <= 2 * r - 2, d, f"deg must lie in 2..{2 * r - 2}")
    elif k == "famB":
        r, nu, nw = vals["r"], vals["nu"], vals["nw"]
        _need(r >= 2, d, "r >= 2")
        _need(1 <= nu <= r - 1 and 1 <= nw <= r - 1, d, f"nu, nw must lie in 1..{r - 1}")
    elif k == "famC":
        r, minus = vals["r"], vals["minus"]
        _need(minus in (0, 1), d, "minus is 0 or 1")
        _need(r >= 2 or (r == 1 and minus == 0), d, "r >= 2 (r = 1 only as K_3)")
    elif k == "famD":
        r, nw = vals["r"], vals["nw"]
        _need(r >= 2, d, "r >= 2")
        _need(1 <= nw <= r, d, f"nw must lie in 1..{r}")
    elif k == "famE":
        ts, rs = vals["t"], vals["r"]
        _need(all(x >= 1 for x in ts + rs), d, "component parameters must be >= 1")
        _need(len(ts) + len(rs) >= 2, d, "at least two components are needed for a cut vertex")
        _need(1 + 2 * sum(ts) + 2 * sum(rs) <= 62, d, "too many vertices")
    elif k == "clique":
        _need(vals["t"] >= 1, d, "t >= 1")
    elif k == "biclique":
        _need(vals["n"] >= 1, d, "n >= 1")
    elif k == "nearbiclique":
        _need(vals["p"] >= 1, d, "p >= 1")
    _need(_order(d) <= 62, d, "too many vertices")


def _order(d: FamilyDescriptor) -> int:
    v = dict(d.params)
    k = d.kind
    if k in CONN2_KINDS[:4]:
        return 2 * v["p"] + 2 * v["q"] + 3
    if k == "typeV":
        return 2 * v["q"] + 3
    if k in ("typeVI", "typeVII"):
        return 2 * v["p"] + 2 * v["q"] + 5
    if k == "typeVIII":
        return 2 * v["p"] + 2 * v["q"] + (5 if v["parity"] == "odd" else 3)
    if k in ("famA", "famB", "famC", "famD"):
        return 2 * v["r"] + 1
    if k == "famE":
        return 1 + 2 * sum(v["t"]) + 2 * sum(v["r"])
    if k == "clique":
        return 2 * v["t"]
    if k == "biclique":
        return 2 * v["n"]
    return 2 * v["p"] + 1


# -- generation -----------------------------------------------------------------


@dataclass(frozen=True)
class Instance:
    """A generated graph with its named vertex groups (tuples of labels)."""

    descriptor: FamilyDescriptor
    graph: Graph
    labels: dict[str, tuple[int, ...]] = field(compare=False)


class _Builder:
    def __init__(self) -> None:
        self.n = 0
        self.edges: set[tuple[int, int]] = set()
        self.labels: dict[str, tuple[int, ...]] = {}

    def add(self, name: str | None, count: int) -> tuple[int, ...]:
        vs = tuple(range(self.n, self.n + count))
        self.n += count
        if name is not None:
            self.labels[name] = vs
        return vs

    def join(self, xs: tuple[int, ...], ys: tuple[int, ...]) -> None:
        for x in xs:
            for y in ys:
                if x != y:
                    self.edges.add((min(x, y), max(x, y)))

    def clique(self, xs: tuple[int, ...]) -> None:
        self.join(xs, xs)

    def name(self, label: str, vs: tuple[int, ...]) -> None:
        self.labels[label] = vs

    def build(self, d: FamilyDescriptor) -> Instance:
        return Instance(d, Graph.from_edges(self.n, sorted(self.edges)), dict(sorted(self.labels.items())))


def generate(d: FamilyDescriptor) -> Instance:
    """The graph described by ``d``; vertex groups are reported in ``labels``."""
    _validate(d)
    v = dict(d.params)
    k = d.kind
    b = _Builder()
    if k in CONN2_KINDS[:4]:
        p, q, b1 = v["p"], v["q"], v["b1"]
        s1, s2 = b.add("s1", 1), b.add("s2", 1)
        b.name("S", s1 + s2)
        a = b.add("A", 2 * q)
        if k in ("typeI", "typeIII"):
            b.clique(a)
            b.join(s1 + s2, a)
        else:
            left, right = a[:q], a[q:]
            b.name("A_1", left)
            b.name("A_2", right)
            b.join(left, right)
            b.join(s1, left)
            b.join(s2, right)
        bb = b.add("B", 2 * p + 1)
        if k in ("typeI", "typeII"):
            b.clique(bb)
            side = bb
        else:
            small, side = bb[:p], bb[p:]
            b.name("B_small", small)
            b.name("B_big", side)
            b.join(small, side)
        b.name("B_1", side[:b1])
        b.name("B_2", side[b1:])
        b.join(s1, side[:b1])
        b.join(s2, side[b1:])
    elif k == "typeV":
        q = v["q"]
        s1, s2 = b.add("s1", 1), b.add("s2", 1)
        b.name("S", s1 + s2)
        bb = b.add("b", 1)
        b.name("B", bb)
        a1, a2, w = b.add("a1", 1), b.add("a2", 1), b.add("w", 1)
        core = b.add("core", 2 * q - 3)
        b.name("A", a1 + a2 + w + core)
        b.clique(core)
        b.join(a1 + a2 + w, core)
        b.join(s1, bb + a1 + w)
        b.join(s2, bb + a2 + w)
    elif k == "typeVI":
        p, q = v["p"], v["q"]
        s1, s2, s3 = b.add("s1", 1), b.add("s2", 1), b.add("s3", 1)
        b.name("S", s1 + s2 + s3)
        a = b.add("A", 2 * p + 1)
        bb = b.add("B", 2 * q + 1)
        b.clique(a)
        b.clique(bb)
        b.name("a", a[:1])
        b.name("b", bb[:1])
        b.join(s1, a[1:] + bb[1:])
        b.join(s2, bb + a[:1])
        b.join(s3, a + bb[:1])
    elif k == "typeVII":
        p, q, a1, a2 = v["p"], v["q"], v["a1"], v["a2"]
        s = [b.add(f"s{i}", 1) for i in (1, 2, 3)]
        b.name("S", s[0] + s[1] + s[2])
        a = b.add("A", 2 * p + 1)
        bb = b.add("B", 2 * q + 1)
        b.clique(a)
        b.clique(bb)
        parts = (a[:a1], a[a1:a1 + a2], a[a1 + a2:])
        for i in range(3):
            b.name(f"A_{i + 1}", parts[i])
            b.join(s[i], bb)
            b.join(s[i], tuple(x for x in a if x not in parts[i]))
    elif k == "typeVIII":
        p, q, a1 = v["p"], v["q"], v["a1"]
        odd = v["parity"] == "odd"
        s1, s2, s3 = b.add("s1", 1), b.add("s2", 1), b.add("s3", 1)
        b.name("S", s1 + s2 + s3)
        a = b.add("A", 2 * p + 1 if odd else 2 * p)
        bb = b.add("B", 2 * q + 1 if odd else 2 * q)
        b.clique(a)
        b.clique(bb)
        b.name("A_1", a[:a1])
        b.name("A_2", a[a1:])
        b.join(s1, s2)
        b.join(s1 + s2 + s3, bb)
        b.join(s1 + s2, a[:a1])
        b.join(s3, a[a1:])
    elif k == "famA":
        r, deg = v["r"], v["deg"]
        vv = b.add("v", 1)
        core = b.add("core", 2 * r)
        b.clique(core)
        b.join(vv, core[:deg])
    elif k in ("famB", "famD"):
        r = v["r"]
        nu = v["nu"] if k == "famB" else r
        nw = v["nw"]
        vv = b.add("v", 1)
        side_u = b.add("U", r)
        side_w = b.add("W", r)
        b.join(side_u, side_w)
        b.join(vv, side_u[:nu] + side_w[:nw])
    elif k == "famC":
        r, minus = v["r"], v["minus"]
        core = b.add("core", 2 * r + 1)
        b.clique(core)
        if minus:
            b.edges.discard((core[0], core[1]))
            b.name("e", core[:2])
    elif k == "famE":
        vv = b.add("v", 1)
        idx = 0
        for t in v["t"]:
            comp = b.add(f"C{idx}", 2 * t)
            b.clique(comp)
            b.join(vv, comp[:2])
            idx += 1
        for r in v["r"]:
            comp = b.add(f"C{idx}", 2 * r)
            b.join(comp[:r], comp[r:])
            b.join(vv, (comp[0], comp[r]))
            idx += 1
    elif k == "clique":
        b.clique(b.add("V", 2 * v["t"]))
    elif k == "biclique":
        n = v["n"]
        b.join(b.add("U", n), b.add("W", n))
    elif k == "nearbiclique":
        p = v["p"]
        b.join(b.add("U", p), b.add("W", p + 1))
    return b.build(d)


def descriptors(kind: str, max_order: int) -> Iterator[FamilyDescriptor]:
    """Every descriptor of ``kind`` with order at most ``max_order``, deterministically."""
    key = _LOWER.get(kind.lower())
    if key is None:
        raise DescriptorError(f"unknown family kind {kind!r}")
    for d in _raw_descriptors(key, max_order):
        if d.order <= max_order:
            yield d


def _raw_descriptors(k: str, max_order: int) -> Iterator[FamilyDescriptor]:
    mk = FamilyDescriptor.make
    span = range(1, max_order + 1)
    if k in CONN2_KINDS[:4]:
        for p in span:
            for q in span:
                if 2 * p + 2 * q + 3 > max_order:
                    continue
                top = 2 * p if k in ("typeI", "typeII") else p
                for b1 in range(1, top + 1):
                    yield mk(k, p=p, q=q, b1=b1)
    elif k == "typeV":
        for q in range(3, max_order):
            if 2 * q + 3 <= max_order:
                yield mk(k, q=q)
    elif k in ("typeVI", "typeVII", "typeVIII"):
        for p in span:
            for q in span:
                if k == "typeVI" and 2 * p + 2 * q + 5 <= max_order:
                    yield mk(k, p=p, q=q)
                elif k == "typeVII" and 2 * p + 2 * q + 5 <= max_order:
                    for a1 in range(1, 2 * p):
                        for a2 in range(1, 2 * p + 1 - a1):
                            yield mk(k, p=p, q=q, a1=a1, a2=a2)
                elif k == "typeVIII":
                    if 2 * p + 2 * q + 5 <= max_order:
                        for a1 in range(2, 2 * p + 1):
                            yield mk(k, p=p, q=q, a1=a1, parity="odd")
                    if p >= 2 and q >= 2 and 2 * p + 2 * q + 3 <= max_order:
                        for a1 in range(2, 2 * p):
                            yield mk(k, p=p, q=q, a1=a1, parity="even")
    elif k == "famA":
        for r in range(2, max_order):
            for deg in range(2, 2 * r - 1):
                yield mk(k, r=r, deg=deg)
            if 2 * r + 1 > max_order:
                return
    elif k == "famB":
        for r in range(2, max_order):
            for nu in range(1, r):
                for nw in range(1, r):
                    yield mk(k, r=r, nu=nu, nw=nw)
            if 2 * r + 1 > max_order:
                return
    elif k == "famC":
        yield mk(k, r=1)
        for r in range(2, max_order):
            yield mk(k, r=r)
            yield mk(k, r=r, minus=1)
            if 2 * r + 1 > max_order:
                return
    elif k == "famD":
        for r in range(2, max_order):
            for nw in range(1, r + 1):
                yield mk(k, r=r, nw=nw)
            if 2 * r + 1 > max_order:
                return
    elif k == "famE":
        budget = (max_order - 1) // 2
        # multisets of component half-orders, cliques first, then bicliques
        for ts in _multisets(budget):
            for rs in _multisets(budget - sum(ts)):
                if len(ts) + len(rs) >= 2:
                    yield mk(k, t=ts, r=rs)
    elif k == "clique":
        for t in range(1, max_order // 2 + 1):
            yield mk(k, t=t)
    elif k == "biclique":
        for n in range(1, max_order // 2 + 1):
            yield mk(k, n=n)
    elif k == "nearbiclique":
        for p in range(1, (max_order - 1) // 2 + 1):
            yield mk(k, p=p)


def _multisets(budget: int, low: int = 1) -> Iterator[tuple[int, ...]]:
    """Non-decreasing tuples of positive integers with sum at most ``budget``."""
    yield ()
    for first in range(low, budget + 1):
        for rest in _multisets(budget - first, first):
            yield (first,) + rest


# -- mask helpers -------------------------------------------------------------


def _is_clique_mask(g: Graph, mask: int) -> bool:
    return all(g.adj[v] & mask == mask & ~(1 << v) for v in bits(mask))


def _biclique_sides(g: Graph, mask: int) -> tuple[int, int] | None:
    """Sides (smaller first) when ``g[mask]`` is a complete bipartite K_{x,y}, x, y >= 1."""
    h, old = g.induced_mask(mask)
    color = two_coloring(h)
    if color is None:
        return None
    x = to_mask(old[i] for i in range(h.n) if color[i] == 0)
    y = mask & ~x
    if not x or not y:
        return None
    if any(g.adj[u] & mask != y for u in bits(x)) or any(g.adj[u] & mask != x for u in bits(y)):
        return None
    if (popcount(y), y & -y) < (popcount(x), x & -x):
        x, y = y, x
    return x, y


def _tuple(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


# -- connectivity 2 -------------------------------------------------------------


@dataclass(frozen=True)
class CutClassification:
    """A descriptor certified by a concrete cut ``S`` and sides ``A``, ``B``."""

    descriptor: FamilyDescriptor
    cut: tuple[int, ...]
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    roles: dict[str, tuple[int, ...]] = field(compare=False, default_factory=dict)


def _conn2_on_cut(g: Graph, cut: tuple[int, int], side_a: int, side_b: int) -> CutClassification | None:
    s1, s2 = cut
    adj = g.adj
    if g.has_edge(s1, s2):
        return None
    nb1, nb2 = adj[s1] & side_b, adj[s2] & side_b
    size_b = popcount(side_b)
    if size_b == 1:
        b = side_b
        na1, na2 = adj[s1] & side_a, adj[s2] & side_a
        if popcount(adj[s1]) != 3 or popcount(adj[s2]) != 3 or nb1 != b or nb2 != b:
            return None
        w = na1 & na2
        if popcount(w) != 1:
            return None
        a1, a2 = na1 & ~w, na2 & ~w
        if popcount(a1) != 1 or popcount(a2) != 1:
            return None
        size_a = popcount(side_a)
        if size_a % 2 or size_a < 6:
            return None
        # A is an even clique minus the triangle a1, a2, w
        missing = a1 | a2 | w
        for x, y in combinations(bits(side_a), 2):
            absent = missing >> x & 1 and missing >> y & 1
            if g.has_edge(x, y) == bool(absent):
                return None
        d = FamilyDescriptor.make("typeV", q=size_a // 2)
        roles = {"a1": _tuple(a1), "a2": _tuple(a2), "w": _tuple(w), "b": _tuple(b)}
        return CutClassification(d, cut, _tuple(side_a), _tuple(side_b), roles)
    # (i): B is an odd clique, or K_{p,p+1} attached only through its larger side
    if size_b % 2 == 0:
        return None
    if not nb1 or not nb2 or nb1 & nb2:
        return None
    roles: dict[str, tuple[int, ...]] = {"B_1": _tuple(nb1), "B_2": _tuple(nb2)}
    if _is_clique_mask(g, side_b):
        if nb1 | nb2 != side_b:
            return None
        p = (size_b - 1) // 2
        b_clique = True
    else:
        sides = _biclique_sides(g, side_b)
        if sides is None:
            return None
        small, big = sides
        p = popcount(small)
        if popcount(big) != p + 1 or nb1 | nb2 != big:
            return None
        b_clique = False
    # (iii): A + S plus the edge s1s2 is an even clique or a balanced biclique
    region = side_a | (1 << s1) | (1 << s2)
    h, old = g.induced_mask(region)
    h = Graph.from_edges(h.n, h.edges + [(old.index(s1), old.index(s2))])
    size_a = popcount(side_a)
    if size_a % 2 or size_a < 2:
        return None
    q = size_a // 2
    full = h.full_mask
    if all(h.adj[i] == full & ~(1 << i) for i in range(h.n)):
        kind = "typeI" if b_clique else "typeIII"
    else:
        hs = _biclique_sides(h, full)
        if hs is None or popcount(hs[0]) != popcount(hs[1]):
            return None
        kind = "typeII" if b_clique else "typeIV"
    d = FamilyDescriptor.make(kind, p=p, q=q, b1=popcount(nb1))
    return CutClassification(d, cut, _tuple(side_a), _tuple(side_b), roles)


def classify_conn2_all(g: Graph) -> list[CutClassification]:
    """Every (cut, orientation) that certifies membership in Types I-V."""
    out = []
    for cut in k_cut_sets(g, 2):
        rest = g.full_mask & ~to_mask(cut)
        comps = component_masks(g, rest)
        if len(comps) != 2:
            continue
        for side_a, side_b in (comps, comps[::-1]):
            res = _conn2_on_cut(g, cut, side_a, side_b)  # type: ignore[arg-type]
            if res is not None:
                out.append(res)
    return out


def classify_conn2(g: Graph) -> CutClassification | None:
    """Types I-V membership of a factor-critical graph with connectivity 2, n >= 7.

    All 2-cuts are tried in lexicographic order, each with both choices of the
    side playing ``B``; the first certificate found is returned.
    """
    if g.n < 7:
        raise ValueError("classification needs at least 7 vertices")
    if vertex_connectivity(g) != 2:
        raise ValueError("classification needs connectivity exactly 2")
    if not is_factor_critical(g):
        raise ValueError("classification needs a factor-critical graph")
    found = classify_conn2_all(g)
    return found[0] if found else None


# -- connectivity 3 -------------------------------------------------------------


def conn3_qualifying_cuts(g: Graph) -> list[tuple[tuple[int, ...], int, int]]:
    """3-cuts whose removal leaves exactly two components, each of order >= 3."""
    out = []
    for cut in k_cut_sets(g, 3):
        comps = component_masks(g, g.full_mask & ~to_mask(cut))
        if len(comps) == 2 and all(popcount(c) >= 3 for c in comps):
            out.append((cut, comps[0], comps[1]))
    return out


def _conn3_on_cut(g: Graph, s: tuple[int, int, int], side_a: int, side_b: int) -> CutClassification | None:
    adj = g.adj
    if not (_is_clique_mask(g, side_a) and _is_clique_mask(g, side_b)):
        return None
    size_a, size_b = popcount(side_a), popcount(side_b)
    s1, s2, s3 = s
    na = [adj[x] & side_a for x in s]
    nb = [adj[x] & side_b for x in s]
    ns = [adj[x] & to_mask(s) for x in s]
    cut = tuple(sorted(s))
    roles = {"s1": (s1,), "s2": (s2,), "s3": (s3,)}
    independent = not any(ns)
    if independent and size_a % 2 and size_b % 2:
        p, q = (size_a - 1) // 2, (size_b - 1) // 2
        # Type VI: s1 misses exactly a and b, s2 only meets a in A, s3 only meets b in B
        a_only, b_only = na[1], nb[2]
        if (
            popcount(a_only) == 1
            and popcount(b_only) == 1
            and na[0] == side_a & ~a_only
            and nb[0] == side_b & ~b_only
            and nb[1] == side_b
            and na[2] == side_a
        ):
            roles = {**roles, "a": _tuple(a_only), "b": _tuple(b_only)}
            return CutClassification(FamilyDescriptor.make("typeVI", p=p, q=q), cut, _tuple(side_a), _tuple(side_b), roles)
        # Type VII: everyone complete to B, the non-neighbors in A partition A
        if all(x == side_b for x in nb):
            parts = [side_a & ~x for x in na]
            if all(parts) and parts[0] | parts[1] | parts[2] == side_a and not (
                parts[0] & parts[1] or parts[0] & parts[2] or parts[1] & parts[2]
            ):
                d = FamilyDescriptor.make("typeVII", p=p, q=q, a1=popcount(parts[0]), a2=popcount(parts[1]))
                roles = {**roles, **{f"A_{i + 1}": _tuple(parts[i]) for i in range(3)}}
                return CutClassification(d, cut, _tuple(side_a), _tuple(side_b), roles)
        return None
    # Type VIII: s1s2 the only edge in S, all of S complete to B, A split between {s1,s2} and s3
    if ns[0] != 1 << s2 or ns[1] != 1 << s1 or ns[2]:
        return None
    if size_a % 2 != size_b % 2:
        return None
    parity = "odd" if size_a % 2 else "even"
    if any(x != side_b for x in nb):
        return None
    a1, a2 = na[0], na[2]
    if na[1] != a1 or popcount(a1) < 2 or not a2 or a1 & a2 or a1 | a2 != side_a:
        return None
    p = size_a // 2
    q = size_b // 2
    if parity == "even" and (p < 2 or q < 2):
        return None
    d = FamilyDescriptor.make("typeVIII", p=p, q=q, a1=popcount(a1), parity=parity)
    roles = {**roles, "A_1": _tuple(a1), "A_2": _tuple(a2)}
    return CutClassification(d, cut, _tuple(side_a), _tuple(side_b), roles)


def classify_conn3_all(g: Graph) -> list[CutClassification]:
    out = []
    for cut, c1, c2 in conn3_qualifying_cuts(g):
        for side_a, side_b in ((c1, c2), (c2, c1)):
            for s in permutations(cut):
                res = _conn3_on_cut(g, s, side_a, side_b)  # type: ignore[arg-type]
                if res is not None:
                    out.append(res)
    return out


def classify_conn3(g: Graph) -> CutClassification | None:
    """Types VI-VIII membership of a graph with connectivity exactly 3."""
    if vertex_connectivity(g) != 3:
        raise ValueError("classification needs connectivity exactly 3")
    found = classify_conn3_all(g)
    return found[0] if found else None


# -- EFC graphs -------------------------------------------------------------------


@dataclass(frozen=True)
class EfcClassification:
    label: str
    # every (label, vertex) pair that certifies a family; vertex is -1 for whole-graph labels
    witnesses: tuple[tuple[str, int], ...]

    @property
    def multiple_kinds(self) -> bool:
        return len({lab for lab, _ in self.witnesses}) > 1


def _is_famc(g: Graph) -> bool:
    n = g.n
    if n == 3:
        return g.m == 3
    if n < 5 or n % 2 == 0:
        return False
    full = n * (n - 1) // 2
    return g.m in (full, full - 1)


def efc_witnesses(g: Graph) -> list[tuple[str, int]]:
    """All family certificates of an EFC graph, without the precondition check."""
    out: list[tuple[str, int]] = []
    if _is_famc(g):
        out.append(("famC", -1))
    if cut_vertices(g):
        out.append(("famE", -1))
    r = (g.n - 1) // 2
    if r < 2:
        return out
    full = g.full_mask
    for v in range(g.n):
        rest = full & ~(1 << v)
        nv = g.adj[v]
        deg = popcount(nv)
        if _is_clique_mask(g, rest):
            if 2 <= deg <= 2 * r - 2:
                out.append(("famA", v))
            continue
        sides = _biclique_sides(g, rest)
        if sides is None or popcount(sides[0]) != popcount(sides[1]):
            continue
        x, y = sides
        # two adjacent neighbors means a neighbor on each side
        if not (nv & x and nv & y):
            continue
        if x & ~nv and y & ~nv:
            out.append(("famB", v))
        if not x & ~nv or not y & ~nv:
            out.append(("famD", v))
    return out


def classify_efc(g: Graph, strict: bool = True) -> EfcClassification:
    """Place an EFC graph into families A-E, or report it as VCE.

    With ``strict`` a graph admitting certificates of two different families
    raises :class:`InconsistencyError`; otherwise the witnesses are returned
    and ``multiple_kinds`` is set. The VCE label is compared against a direct
    vertex-deletion test either way.
    """
    if not is_EFC(g):
        raise ValueError("graph must be factor-critical and equimatchable")
    if g.m == 0:
        # K_1 is vacuously EFC but carries no family structure and is not VCE
        raise ValueError("graph must have at least one edge")
    wit = efc_witnesses(g)
    kinds = sorted({lab for lab, _ in wit})
    if len(kinds) > 1 and strict:
        raise InconsistencyError(f"graph {g} admits several family labels: {', '.join(kinds)}")
    label = kinds[0] if kinds else "VCE"
    vce = bool(is_VCE(g))
    if vce != (label == "VCE"):
        raise InconsistencyError(f"graph {g}: label {label} but VCE test says {vce}")
    return EfcClassification(label, tuple(sorted(wit)))


# -- bipartite tests --------------------------------------------------------------


def _bipartite_sides(g: Graph, allow_k2: bool) -> tuple[frozenset[int], frozenset[int]]:
    if not is_connected(g) or not is_bipartite(g):
        raise ValueError("graph must be connected and bipartite")
    if not allow_k2 and g.n == 2:
        raise ValueError("K_2 is excluded")
    bp = bipartition(g)
    assert bp is not None
    return bp.side_u, bp.side_w


def _nonempty_subsets(mask: int) -> Iterator[int]:
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def bipartite_ece_test(g: Graph) -> bool:
    """Hall-type condition on the smaller side U deciding ECE for bipartite graphs.

    For each u in U and non-empty S inside N(u): |N(S)| >= |S|, with equality
    exactly at S = N(u). Equality there is required, not merely allowed; without
    it the condition would also accept C_6, which is not even equimatchable.
    """
    side_u, _ = _bipartite_sides(g, allow_k2=False)
    for u in sorted(side_u):
        nu = g.adj[u]
        for s in _nonempty_subsets(nu):
            ns = popcount(g.neighborhood(bits(s)))
            k = popcount(s)
            if ns < k or (ns == k) != (s == nu):
                return False
    return True


def bipartite_equim_test(g: Graph) -> bool:
    """Each u in the smaller side has a non-empty S inside N(u) with |N(S)| <= |S|."""
    side_u, _ = _bipartite_sides(g, allow_k2=True)
    for u in sorted(side_u):
        if not any(popcount(g.neighborhood(bits(s))) <= popcount(s) for s in _nonempty_subsets(g.adj[u])):
            return False
    return True
