"""Equimatchability and the critical / stable variants built on top of it.

Every negative answer carries a witness so that a failed check can be
audited by hand: two maximal matchings of different sizes, a non-critical
edge, a vertex whose removal keeps the graph equimatchable, and so on.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any, Iterable

from .graph import (
    Graph,
    bits,
    independent_set_masks,
    independent_sets,
    is_bipartite,
    is_connected,
    maximal_independent_set_masks,
    popcount,
    vertex_connectivity,
)
from .matching import (
    InconsistencyError,
    Matching,
    has_perfect_matching_mask,
    is_factor_critical,
    is_randomly_matchable,
    iter_maximal_matchings,
    max_matching_size,
    maximal_matching_sizes,
    saturating_matching,
    weak_witness,
)

# enumerator cross-checks are only run up to this order
_CHECK_LIMIT = 10


def _json_value(x: Any) -> Any:
    if isinstance(x, Matching):
        return x.to_json()
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, (frozenset, set)):
        return sorted(_json_value(y) for y in x)
    if isinstance(x, tuple) and len(x) == 2 and all(type(y) is int for y in x):
        return f"{x[0]}-{x[1]}"
    if isinstance(x, (list, tuple)):
        return [_json_value(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _json_value(v) for k, v in x.items()}
    raise TypeError(f"cannot serialize witness component {x!r}")


@dataclass(frozen=True)
class Decision:
    """A yes/no answer with an optional certificate; truthiness is the answer.

    ``reason`` names the clause that decided the answer and ``witness`` holds
    the certificate (matchings, an edge, a vertex, an independent set).
    """

    value: bool
    reason: str = ""
    witness: Any = None

    def __bool__(self) -> bool:
        return self.value

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"value": self.value}
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = _json_value(self.witness)
        return out


def _check_edge(g: Graph, e: tuple[int, int]) -> tuple[int, int]:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge of the graph")
    return (u, v) if u < v else (v, u)


# -- equimatchability ---------------------------------------------------------------


def is_equimatchable(g: Graph) -> Decision:
    """All maximal matchings have the same size; otherwise two of different sizes."""
    res = maximal_matching_sizes(g, short_circuit=True)
    if len(res.sizes) == 1:
        return Decision(True)
    small, large = min(res.sizes), max(res.sizes)
    return Decision(False, "maximal matchings of different sizes", (res.witnesses[small], res.witnesses[large]))


class Strength(enum.Enum):
    STRONG = "Strong"
    WEAK = "Weak"


@dataclass(frozen=True)
class VertexClass:
    vertex: int
    kind: Strength
    # a maximal matching leaving the vertex exposed, for weak vertices
    witness: Matching | None = None

    @property
    def strong(self) -> bool:
        return self.kind is Strength.STRONG


def vertex_class(g: Graph, v: int, check: bool = True) -> VertexClass:
    """Strong iff every maximal matching saturates ``v``.

    When ``g`` is equimatchable the answer must agree with nu(g - v) = nu(g) - 1;
    with ``check`` that identity is enforced, and on small graphs the answer
    is also compared with a full walk over the maximal matchings.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    ww = weak_witness(g, v)
    strong = ww is None
    if check:
        if g.n <= _CHECK_LIMIT:
            walked = all(mm.saturates(v) for mm in iter_maximal_matchings(g))
            if walked != strong:
                raise InconsistencyError(f"vertex {v}: enumeration says strong={walked}, exposed-set search {strong}")
        if is_equimatchable(g):
            drops = max_matching_size(g.remove_vertex(v)) == max_matching_size(g) - 1
            if drops != strong:
                raise InconsistencyError(f"vertex {v}: strong={strong} but nu drop={drops} in an equimatchable graph")
    return VertexClass(v, Strength.STRONG if strong else Strength.WEAK, ww)


def is_strong(g: Graph, v: int) -> bool:
    return weak_witness(g, v) is None


def g_minus_v_equimatchable_predicted(g: Graph, v: int, check: bool = True) -> bool:
    """Predict whether g - v is equimatchable from strong / weak vertices alone.

    The prediction is: v strong in g, or every neighbor of v strong in g - v.
    With ``check`` it is compared against a direct test of g - v.
    """
    if not is_equimatchable(g):
        raise ValueError("graph must be equimatchable")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    h = g.remove_vertex(v)
    predicted = is_strong(g, v) or all(is_strong(h, u if u < v else u - 1) for u in g.neighbors(v))
    if check:
        actual = bool(is_equimatchable(h))
        if actual != predicted:
            raise InconsistencyError(f"vertex {v}: predicted {predicted}, g - v equimatchable {actual}")
    return predicted


# -- critical edges ---------------------------------------------------------------


def is_critical_edge_definition(g: Graph, e: tuple[int, int]) -> bool:
    """True iff deleting ``e`` leaves a graph that is not equimatchable."""
    u, v = _check_edge(g, e)
    return not is_equimatchable(g.remove_edge(u, v))


def critical_edge_matching(g: Graph, e: tuple[int, int]) -> Matching | None:
    """A matching containing ``e`` that saturates N({u, v}), if one exists."""
    u, v = _check_edge(g, e)
    pair = (1 << u) | (1 << v)
    rest = g.full_mask & ~pair
    found = saturating_matching(g, g.neighborhood((u, v)), rest)
    if found is None:
        return None
    return Matching(g, found.edges | {(u, v)})


def is_critical_edge_matching(g: Graph, e: tuple[int, int]) -> bool:
    return critical_edge_matching(g, e) is not None


# -- ECE / VCE / ESE / EFC ----------------------------------------------------------


def is_ECE(g: Graph) -> Decision:
    """Equimatchable and every edge critical (decided by the definition)."""
    eq = is_equimatchable(g)
    if not eq:
        return Decision(False, "not equimatchable", eq.witness)
    for u, v in g.edges:
        if not is_critical_edge_definition(g, (u, v)):
            return Decision(False, "edge is not critical", (u, v))
    return Decision(True)


def is_VCE(g: Graph) -> Decision:
    """Equimatchable and no vertex deletion keeps it equimatchable."""
    eq = is_equimatchable(g)
    if not eq:
        return Decision(False, "not equimatchable", eq.witness)
    for v in range(g.n):
        if is_equimatchable(g.remove_vertex(v)):
            return Decision(False, "vertex deletion stays equimatchable", v)
    return Decision(True)


def is_ESE(g: Graph) -> Decision:
    """Equimatchable and every edge deletion keeps it equimatchable."""
    eq = is_equimatchable(g)
    if not eq:
        return Decision(False, "not equimatchable", eq.witness)
    for u, v in g.edges:
        if is_critical_edge_definition(g, (u, v)):
            return Decision(False, "edge is critical", (u, v))
    return Decision(True)


def factor_critical_decision(g: Graph) -> Decision:
    if g.n % 2 == 0:
        return Decision(False, "even order")
    full = g.full_mask
    for v in range(g.n):
        if not has_perfect_matching_mask(g, full & ~(1 << v)):
            return Decision(False, "g - v has no perfect matching", v)
    return Decision(True)


def is_EFC(g: Graph) -> Decision:
    """Equimatchable and factor-critical."""
    fc = factor_critical_decision(g)
    if not fc:
        return Decision(False, "not factor-critical", fc.witness)
    eq = is_equimatchable(g)
    if not eq:
        return Decision(False, "not equimatchable", eq.witness)
    return Decision(True)


def efc_triple_witness(g: Graph, check: bool = True) -> tuple[int, int, int] | None:
    """An independent triple whose removal leaves a perfectly matchable graph.

    Only meaningful for factor-critical graphs, where such a triple exists
    exactly when the graph is not equimatchable.
    """
    if not is_factor_critical(g):
        raise ValueError("graph must be factor-critical")
    full = g.full_mask
    found = None
    for t in independent_sets(g, 3):
        if has_perfect_matching_mask(g, full & ~((1 << t[0]) | (1 << t[1]) | (1 << t[2]))):
            found = t
            break
    if check and (found is None) != bool(is_equimatchable(g)):
        raise InconsistencyError(f"triple witness {found} disagrees with equimatchability")
    return found  # type: ignore[return-value]


# -- line-graph side: well-covered graphs and shedding vertices ------------------


def is_well_covered(g: Graph) -> bool:
    """All maximal independent sets have the same size."""
    return len({popcount(s) for s in maximal_independent_set_masks(g)}) <= 1


def is_shedding_vertex(g: Graph, x: int) -> bool:
    """Every independent set of g - N[x] extends by some neighbor of x."""
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    nx = g.adj[x]
    if not nx:
        return False
    residual = g.full_mask & ~nx & ~(1 << x)
    for s in independent_set_masks(g, residual):
        covered = 0
        for y in bits(s):
            covered |= g.adj[y]
        if not nx & ~covered:
            return False
    return True


def shedding_vertices(g: Graph) -> list[int]:
    return [x for x in range(g.n) if is_shedding_vertex(g, x)]


# -- report -------------------------------------------------------------------------

FLAG_NAMES = (
    "equimatchable",
    "factor_critical",
    "randomly_matchable",
    "bipartite",
    "efc",
    "ece",
    "vce",
    "ese",
    "well_covered",
)


@dataclass
class PropertyReport:
    """Numbers, flags and certificates for one graph.

    ``well_covered`` refers to the line graph, which is well-covered exactly
    when the graph itself is equimatchable. Flags that were not requested are
    absent from the report.
    """

    graph6: str
    n: int
    m: int
    nu: int
    connectivity: int
    maximal_sizes: list[int]
    flags: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "connectivity": self.connectivity,
            "flags": dict(sorted(self.flags.items())),
            "graph6": self.graph6,
            "m": self.m,
            "maximal_sizes": self.maximal_sizes,
            "n": self.n,
            "nu": self.nu,
            "witnesses": dict(sorted(self.witnesses.items())),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def property_report(g: Graph, flags: Iterable[str] | None = None) -> PropertyReport:
    """Compute the requested flags (all when ``flags`` is None) with witnesses."""
    from .graph import line_graph

    wanted = list(FLAG_NAMES) if flags is None else list(flags)
    unknown = [f for f in wanted if f not in FLAG_NAMES]
    if unknown:
        raise ValueError(f"unknown flag(s): {', '.join(unknown)}")
    sizes = maximal_matching_sizes(g)
    rep = PropertyReport(
        graph6=str(g),
        n=g.n,
        m=g.m,
        nu=max(sizes.sizes),
        connectivity=vertex_connectivity(g),
        maximal_sizes=sorted(sizes.sizes),
    )
    decisions: dict[str, Decision] = {}

    def record(name: str, d: Decision) -> None:
        decisions[name] = d
        rep.flags[name] = d.value
        if not d.value and d.witness is not None:
            rep.witnesses[name] = d.to_json()

    equim = is_equimatchable(g)
    for name in wanted:
        if name == "equimatchable":
            record(name, equim)
        elif name == "factor_critical":
            record(name, factor_critical_decision(g))
        elif name == "randomly_matchable":
            # every maximal matching perfect; for connected graphs this is K_2n or K_n,n
            value = bool(equim) and 2 * rep.nu == g.n
            if is_connected(g) and g.n > 0 and value != is_randomly_matchable(g, check_definition=False):
                raise InconsistencyError("randomly matchable: definition and classification disagree")
            record(name, Decision(value))
        elif name == "bipartite":
            record(name, Decision(is_bipartite(g)))
        elif name == "efc":
            record(name, is_EFC(g))
        elif name == "ece":
            record(name, is_ECE(g))
        elif name == "vce":
            record(name, is_VCE(g))
        elif name == "ese":
            record(name, is_ESE(g))
        elif name == "well_covered":
            record(name, Decision(is_well_covered(line_graph(g)[0])))
    _check_consistency(rep.flags, bool(equim))
    return rep


def _check_consistency(flags: dict[str, bool], equim: bool) -> None:
    for name in ("efc", "ece", "vce", "ese", "randomly_matchable"):
        if flags.get(name) and not equim:
            raise InconsistencyError(f"{name} holds but the graph is not equimatchable")
    if flags.get("efc") and flags.get("factor_critical") is False:
        raise InconsistencyError("efc holds but the graph is not factor-critical")
    # maximal independent sets of L(g) are exactly the maximal matchings of g
    if "well_covered" in flags and flags["well_covered"] != equim:
        raise InconsistencyError("line graph well-coveredness disagrees with equimatchability")
