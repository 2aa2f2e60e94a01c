"""Exhaustive census over connected graphs and the theorem registry.

``run_census`` filters all connected graphs of one order by a conjunction of
named predicates. ``verify`` re-checks a registered claim on every eligible
connected graph up to an order bound (or on generated / constructed
instances for the claims that are about families) and reports each failing
graph together with the clause that failed.
"""

from __future__ import annotations

import json
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Iterable, Iterator, Sequence

from .enumerate import connected_graph6
from .families import (
    CONN2_KINDS,
    CONN3_KINDS,
    classify_conn2_all,
    classify_conn3_all,
    classify_efc,
    bipartite_ece_test,
    bipartite_equim_test,
    descriptors,
    efc_witnesses,
    generate,
)
from .graph import (
    Bipartition,
    Graph,
    bipartition,
    bits,
    complement,
    complete_bipartite_params,
    component_masks,
    cut_vertices,
    dominating_edges,
    independence_number,
    is_complete,
    is_maximal_triangle_free,
    is_triangle_free,
    k_cut_sets,
    line_graph,
    parse_graph6,
    popcount,
    vertex_connectivity,
)
from .matching import (
    InconsistencyError,
    Matching,
    has_perfect_matching_mask,
    is_factor_critical,
    iter_maximal_matchings,
    iter_minimal_isolating_matchings,
    max_matching_size,
)
from .properties import (
    Decision,
    FLAG_NAMES,
    efc_triple_witness,
    g_minus_v_equimatchable_predicted,
    is_critical_edge_matching,
    is_ECE,
    is_ESE,
    is_equimatchable,
    is_shedding_vertex,
    is_strong,
    is_well_covered,
    property_report,
)

DEFAULT_CAP = 25


# -- per-graph facts ------------------------------------------------------------------


class Facts:
    """Lazily computed properties of one graph, shared by all registry checks."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self.n = g.n
        self.m = g.m

    @cached_property
    def graph6(self) -> str:
        return str(self.g)

    @cached_property
    def equim(self) -> Decision:
        return is_equimatchable(self.g)

    @cached_property
    def fc(self) -> bool:
        return is_factor_critical(self.g)

    @cached_property
    def efc(self) -> bool:
        return self.fc and bool(self.equim)

    @cached_property
    def bip(self) -> Bipartition | None:
        return bipartition(self.g)

    @cached_property
    def kappa(self) -> int:
        return vertex_connectivity(self.g)

    @cached_property
    def two_connected(self) -> bool:
        return self.n >= 3 and self.kappa >= 2

    @cached_property
    def cuts(self) -> list[int]:
        return cut_vertices(self.g)

    @cached_property
    def complete(self) -> bool:
        return is_complete(self.g)

    @cached_property
    def nu(self) -> int:
        return max_matching_size(self.g)

    @cached_property
    def critical(self) -> dict[tuple[int, int], bool]:
        """Edge -> critical by the definition; only meaningful for equimatchable graphs."""
        g = self.g
        return {e: not is_equimatchable(g.remove_edge(*e)) for e in g.edges}

    @cached_property
    def ece(self) -> bool:
        return bool(self.equim) and all(self.critical.values())

    @cached_property
    def ese(self) -> bool:
        return bool(self.equim) and not any(self.critical.values())

    @cached_property
    def vertex_deletions_equim(self) -> list[bool]:
        g = self.g
        return [bool(is_equimatchable(g.remove_vertex(v))) for v in range(self.n)]

    @cached_property
    def vce(self) -> bool:
        return bool(self.equim) and not any(self.vertex_deletions_equim)

    @cached_property
    def maximal_matchings(self) -> list[Matching]:
        return list(iter_maximal_matchings(self.g))

    @cached_property
    def even_clique(self) -> bool:
        return self.complete and self.n % 2 == 0 and self.n >= 2

    @cached_property
    def randomly_matchable(self) -> bool:
        # every maximal matching is perfect
        return bool(self.equim) and self.n % 2 == 0 and 2 * self.nu == self.n

    @cached_property
    def spanning_rm_deletions(self) -> list[int]:
        """Vertices v with g - v isomorphic to K_2r or K_r,r (n = 2r + 1)."""
        if self.n % 2 == 0 or self.n < 3:
            return []
        r = (self.n - 1) // 2
        out = []
        for v in range(self.n):
            h = self.g.remove_vertex(v)
            if is_complete(h) or complete_bipartite_params(h) == (r, r):
                out.append(v)
        return out


def _rm_component(h: Graph) -> bool:
    """Connected h is K_2t or K_r,r (t, r >= 1)."""
    if h.n == 0 or h.n % 2:
        return False
    if is_complete(h):
        return True
    bp = complete_bipartite_params(h)
    return bp is not None and bp[0] == bp[1]


def _vertex_split_ok(g: Graph, v: int) -> bool:
    """Every component of g - v is K_2t or K_r,r and v sees an edge of each."""
    rest = g.full_mask & ~(1 << v)
    for comp in component_masks(g, rest):
        h, _ = g.induced_mask(comp)
        if not _rm_component(h):
            return False
        seen = g.adj[v] & comp
        if not any(g.adj[x] & seen for x in bits(seen)):
            return False
    return True


# -- registry ------------------------------------------------------------------------------

Check = Callable[[Facts], Iterator[str]]


@dataclass(frozen=True)
class Theorem:
    id: str
    claim: str
    check: Check | None = None
    # claims about generated or constructed families take the order bound instead
    instances: Callable[[int], Iterator[tuple[str, list[str]]]] | None = None
    conjecture_grade: bool = False
    max_order: int | None = None


REGISTRY: dict[str, Theorem] = {}


def _register(
    tid: str,
    claim: str,
    *,
    conjecture_grade: bool = False,
    max_order: int | None = None,
    instances: bool = False,
) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    def deco(fn: Callable[..., Any]) -> Callable[..., Any]:
        if instances:
            REGISTRY[tid] = Theorem(tid, claim, None, fn, conjecture_grade, max_order)
        else:
            REGISTRY[tid] = Theorem(tid, claim, fn, None, conjecture_grade, max_order)
        return fn

    return deco


@_register("plummer-trichotomy", "2-connected equimatchable graphs are factor-critical, bipartite or K_2t")
def _plummer(f: Facts) -> Iterator[str]:
    if f.two_connected and f.equim:
        if not (f.fc or f.bip is not None or f.even_clique):
            yield "2-connected equimatchable but none of factor-critical / bipartite / even clique"


@_register("bip-equim-lemma", "connected bipartite: equimatchable iff every u in U has S in N(u) with |N(S)| <= |S|")
def _bip_equim(f: Facts) -> Iterator[str]:
    if f.bip is not None and f.n >= 1:
        if bipartite_equim_test(f.g) != bool(f.equim):
            yield f"neighborhood condition {not f.equim} but equimatchable {bool(f.equim)}"


@_register("bip-saturates-U", "connected bipartite: equimatchable iff every maximal matching saturates U")
def _bip_sat(f: Facts) -> Iterator[str]:
    if f.bip is not None:
        u = 0
        for x in f.bip.side_u:
            u |= 1 << x
        saturates = all(not u & ~mm.vertex_mask for mm in f.maximal_matchings)
        if saturates != bool(f.equim):
            yield f"all maximal matchings saturate U: {saturates}, equimatchable: {bool(f.equim)}"


@_register("cut-vertex-components", "each component of G - v is equimatchable when v is a cut vertex of equimatchable G")
def _cut_components(f: Facts) -> Iterator[str]:
    if f.equim and f.cuts:
        g = f.g
        for v in f.cuts:
            for comp in component_masks(g, g.full_mask & ~(1 << v)):
                h, _ = g.induced_mask(comp)
                if not is_equimatchable(h):
                    yield f"cut vertex {v}: component {sorted(bits(comp))} is not equimatchable"


@_register("efc-triple", "factor-critical G is equimatchable iff no independent triple I leaves G - I perfectly matchable")
def _efc_triple(f: Facts) -> Iterator[str]:
    if f.fc:
        try:
            efc_triple_witness(f.g, check=True)
        except InconsistencyError as exc:
            yield str(exc)


@_register("one-exposed", "every maximal matching of an EFC graph leaves exactly one vertex exposed")
def _one_exposed(f: Facts) -> Iterator[str]:
    if f.efc:
        for mm in f.maximal_matchings:
            if f.n - 2 * len(mm) != 1:
                yield f"maximal matching {mm.to_json()} leaves {f.n - 2 * len(mm)} vertices exposed"
                return


@_register("isolating-structure", "in a 2-connected EFC graph, removing a minimal isolating matching and v leaves K_2t or K_t,t")
def _isolating(f: Facts) -> Iterator[str]:
    if f.efc and f.two_connected:
        g = f.g
        for v in range(f.n):
            for mm in iter_minimal_isolating_matchings(g, v):
                rest = g.full_mask & ~mm.vertex_mask & ~(1 << v)
                h, _ = g.induced_mask(rest)
                if h.n and not _rm_component(h):
                    yield f"vertex {v}, matching {mm.to_json()}: remainder {h} is neither K_2t nor K_t,t"
                    return


@_register("strong-iff-nu", "in an equimatchable graph v is strong iff nu(G - v) = nu(G) - 1")
def _strong_nu(f: Facts) -> Iterator[str]:
    if f.equim:
        g = f.g
        for v in range(f.n):
            walked = all(mm.saturates(v) for mm in f.maximal_matchings)
            drop = max_matching_size(g.remove_vertex(v)) == f.nu - 1
            fast = is_strong(g, v)
            if not walked == drop == fast:
                yield f"vertex {v}: enumeration strong={walked}, nu drop={drop}, exposed-set strong={fast}"


@_register("gv-equim-prop", "G - v is equimatchable iff v is strong or all of N(v) is strong in G - v")
def _gv(f: Facts) -> Iterator[str]:
    if f.equim:
        for v in range(f.n):
            try:
                g_minus_v_equimatchable_predicted(f.g, v, check=True)
            except InconsistencyError as exc:
                yield str(exc)


@_register("vce-2connected", "VCE graphs are 2-connected")
def _vce_2conn(f: Facts) -> Iterator[str]:
    if f.vce and not f.two_connected:
        yield "VCE graph is not 2-connected"


@_register("no-bipartite-vce", "no bipartite graph is VCE")
def _no_bip_vce(f: Facts) -> Iterator[str]:
    if f.bip is not None and f.vce:
        yield "bipartite graph is VCE"


@_register("kt-not-vce", "K_t is not VCE for t >= 2")
def _kt(f: Facts) -> Iterator[str]:
    if f.complete and f.n >= 2 and f.vce:
        yield "complete graph is VCE"


@_register("vce-characterization", "2-connected G on 2r+1 vertices is VCE iff it is EFC with no G - v equal to K_2r or K_r,r")
def _vce_char(f: Facts) -> Iterator[str]:
    if f.two_connected and f.n % 2 == 1:
        rhs = f.efc and not f.spanning_rm_deletions
        if f.vce != rhs:
            yield f"VCE {f.vce} but (K_2r, K_r,r)-free EFC {rhs}"


@_register("efc-not-vce", "an EFC graph that is not VCE has a vertex v splitting it into K_r,r / K_2t parts each meeting an edge of N(v)")
def _efc_not_vce(f: Facts) -> Iterator[str]:
    if f.efc and f.m >= 1 and not f.vce:
        if not any(_vertex_split_ok(f.g, v) for v in range(f.n)):
            yield "no vertex with the required split"


@_register("critical-edge-lemma", "for equimatchable G (n >= 3): uv is critical iff some matching contains uv and saturates N({u,v})")
def _crit_lemma(f: Facts) -> Iterator[str]:
    if f.equim and f.n >= 3:
        for e, crit in f.critical.items():
            if is_critical_edge_matching(f.g, e) != crit:
                yield f"edge {e[0]}-{e[1]}: definition {crit}, matching criterion {not crit}"


@_register("no-dominating-edge", "a connected factor-critical ECE graph has no dominating edge")
def _no_dom(f: Facts) -> Iterator[str]:
    if f.fc and f.m >= 1 and f.ece:
        dom = dominating_edges(f.g)
        if dom:
            yield f"dominating edge {dom[0][0]}-{dom[0][1]}"


@_register("rm-implies-ece", "randomly matchable graphs other than K_2 are ECE")
def _rm_ece(f: Facts) -> Iterator[str]:
    if f.randomly_matchable and f.n >= 3 and not f.ece:
        yield "randomly matchable but not ECE"


@_register("ece-2connected", "ECE graphs are 2-connected")
def _ece_2conn(f: Facts) -> Iterator[str]:
    if f.m >= 1 and f.ece and not f.two_connected:
        yield "ECE graph is not 2-connected"


@_register("ece-trichotomy", "ECE graphs are factor-critical, bipartite or K_2t")
def _ece_tri(f: Facts) -> Iterator[str]:
    if f.m >= 1 and f.ece and not (f.fc or f.bip is not None or f.even_clique):
        yield "ECE graph outside the three classes"


@_register("bipartite-ece-thm", "connected bipartite G other than K_2 is ECE iff the strict Hall condition holds on N(u) for u in U")
def _bip_ece(f: Facts) -> Iterator[str]:
    if f.bip is not None and f.n >= 3:
        if bipartite_ece_test(f.g) != f.ece:
            yield f"Hall-type condition {not f.ece}, ECE {f.ece}"


@_register("fcece-min7", "factor-critical ECE graphs have at least 7 vertices")
def _min7(f: Facts) -> Iterator[str]:
    if f.n < 7 and f.m >= 1 and f.fc and f.ece:
        yield f"factor-critical ECE graph on {f.n} vertices"


@_register("conn2-characterization", "a factor-critical graph of connectivity 2 and order >= 7 is ECE iff it belongs to Types I-V")
def _conn2(f: Facts) -> Iterator[str]:
    if f.n >= 7 and f.fc and f.kappa == 2:
        member = bool(classify_conn2_all(f.g))
        if member != f.ece:
            yield f"ECE {f.ece} but Types I-V membership {member}"


@_register("k2r-blocks-ece", "a connected graph on 2r+1 vertices with G - v equal to K_2r or K_r,r is not ECE")
def _k2r(f: Facts) -> Iterator[str]:
    if f.spanning_rm_deletions and f.ece:
        yield f"G - {f.spanning_rm_deletions[0]} is randomly matchable yet G is ECE"


@_register("fcece-subset-vce", "factor-critical ECE graphs are VCE")
def _fcece_vce(f: Facts) -> Iterator[str]:
    if f.fc and f.m >= 1 and f.ece and not f.vce:
        yield "factor-critical ECE but not VCE"


@_register("efc-partition", "EFC graphs split into families A-E and VCE, with exactly one label each")
def _efc_partition(f: Facts) -> Iterator[str]:
    if f.efc and f.m >= 1:
        wit = efc_witnesses(f.g)
        kinds = sorted({lab for lab, _ in wit})
        if len(kinds) > 1:
            yield f"several family labels: {', '.join(kinds)}"
        elif bool(kinds) == f.vce:
            yield f"labels {kinds or ['VCE']} but VCE is {f.vce}"


@_register("ece-ese-disjoint", "no graph with an edge is both ECE and ESE")
def _ece_ese(f: Facts) -> Iterator[str]:
    if f.m >= 1 and f.ece and f.ese:
        yield "both ECE and ESE"


@_register("efc-cut-vertex", "G is EFC with cut vertex v iff every component of G - v is K_r,r or K_2t meeting an edge of N(v)")
def _efc_cut(f: Facts) -> Iterator[str]:
    for v in f.cuts:
        split = _vertex_split_ok(f.g, v)
        if split != f.efc:
            yield f"cut vertex {v}: split structure {split}, EFC {f.efc}"
            return


@_register("ese-family-relations", "families C and D are ESE, A, B and E are not; no member of A-D is ECE", instances=True)
def _ese_families(n_max: int) -> Iterator[tuple[str, list[str]]]:
    for kind in ("famA", "famB", "famC", "famD", "famE"):
        for d in descriptors(kind, min(n_max, 11)):
            g = generate(d).graph
            fails = []
            ese, ece = bool(is_ESE(g)), bool(is_ECE(g))
            if ese != (kind in ("famC", "famD")):
                fails.append(f"{d}: ESE is {ese}")
            if kind != "famE" and ece:
                fails.append(f"{d}: member is ECE")
            yield str(g), fails


@_register(
    "appendix-two-components",
    "for a k-connected factor-critical ECE graph (k >= 3) every k-cut leaves exactly two components",
    conjecture_grade=True,
)
def _two_comp(f: Facts) -> Iterator[str]:
    if f.fc and f.m >= 1 and f.kappa >= 3 and f.ece:
        k = f.kappa
        for cut in k_cut_sets(f.g, k):
            rest = f.g.full_mask
            for c in cut:
                rest &= ~(1 << c)
            comps = component_masks(f.g, rest)
            if len(comps) != 2:
                yield f"cut {list(cut)} leaves {len(comps)} components"
                return


@_register(
    "appendix-conn3",
    "with a 3-cut leaving two parts of order >= 3, a 3-connected graph is factor-critical ECE iff it is of Type VI, VII or VIII",
    conjecture_grade=True,
)
def _conn3(f: Facts) -> Iterator[str]:
    from .families import conn3_qualifying_cuts

    if f.n >= 9 and f.kappa == 3 and conn3_qualifying_cuts(f.g):
        member = bool(classify_conn3_all(f.g))
        lhs = f.fc and f.ece
        if member != lhs:
            yield f"factor-critical ECE {lhs} but Types VI-VIII membership {member}"


@_register(
    "appendix-conn4-equiv",
    "k-connected odd G (k >= 4, n >= 2k+3, min degree > k): ECE iff alpha = 2 without dominating edge iff complement maximal triangle-free",
    conjecture_grade=True,
    instances=True,
)
def _conn4(n_max: int) -> Iterator[tuple[str, list[str]]]:
    for g in conn4_candidates():
        kappa = vertex_connectivity(g)
        delta = min(g.degree(v) for v in range(g.n))
        if not (kappa >= 4 and g.n % 2 == 1 and g.n >= 2 * kappa + 3 and delta > kappa):
            continue
        ece = bool(is_ECE(g))
        alpha2 = independence_number(g) == 2 and not dominating_edges(g)
        mtf = is_maximal_triangle_free(complement(g))
        fails = [] if ece == alpha2 == mtf else [f"ECE {ece}, alpha=2 without dominating edge {alpha2}, complement MTF {mtf}"]
        yield str(g), fails


@_register("linegraph-bridge", "G equimatchable iff L(G) well-covered; ECE iff L(G) well-covered with no shedding vertex", max_order=6)
def _bridge(f: Facts) -> Iterator[str]:
    if f.m >= 2:
        lg, _ = line_graph(f.g)
        wc = is_well_covered(lg)
        if wc != bool(f.equim):
            yield f"L(G) well-covered {wc}, equimatchable {bool(f.equim)}"
        # connected with two or more edges, so G has no K_2 component
        no_shed = wc and not any(is_shedding_vertex(lg, x) for x in range(lg.n))
        if no_shed != f.ece:
            yield f"L(G) well-covered without shedding vertex {no_shed}, ECE {f.ece}"


# -- conn-4 candidates --------------------------------------------------------------


def _circulant(n: int, steps: Iterable[int]) -> Graph:
    edges = {(min(i, (i + s) % n), max(i, (i + s) % n)) for i in range(n) for s in steps if s % n}
    return Graph.from_edges(n, sorted(edges))


def _complete_triangle_free(g: Graph) -> Graph:
    """Add edges in lexicographic order whenever no triangle appears."""
    adj = list(g.adj)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not adj[u] >> v & 1 and not adj[u] & adj[v]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def _c5_blowup(sizes: Sequence[int]) -> Graph:
    starts = [sum(sizes[:i]) for i in range(5)]
    n = sum(sizes)
    edges = []
    for i in range(5):
        j = (i + 1) % 5
        for a in range(starts[i], starts[i] + sizes[i]):
            for b in range(starts[j], starts[j] + sizes[j]):
                edges.append((min(a, b), max(a, b)))
    return Graph.from_edges(n, edges)


def conn4_candidates() -> list[Graph]:
    """Complements of deterministic triangle-free graphs on 11 and 13 vertices.

    Seeds are cycles, triangle-free circulants, the 11-vertex Andrasfai graph
    and C_5 blow-ups; each seed contributes itself (a negative control when it
    is not maximal) and its lexicographic maximal completion.
    """
    seen: set[str] = set()
    out: list[Graph] = []

    def add(h: Graph) -> None:
        if not is_triangle_free(h):
            return
        g = complement(h)
        key = str(g)
        if key not in seen:
            seen.add(key)
            out.append(g)

    from itertools import combinations

    for n in (11, 13):
        seeds = [_circulant(n, (1,))]
        for k in range(1, 4):
            for steps in combinations(range(1, n // 2 + 1), k):
                c = _circulant(n, steps)
                if is_triangle_free(c):
                    seeds.append(c)
        if n == 11:
            seeds.append(_circulant(11, (1, 4)))
        for a in range(1, n):
            for b in range(a, n):
                for c in range(1, n):
                    for d in range(1, n):
                        e = n - a - b - c - d
                        if e >= 1 and (a, b, c, d, e) <= (b, a, e, d, c):
                            seeds.append(_c5_blowup((a, b, c, d, e)))
        for s in seeds:
            add(s)
            add(_complete_triangle_free(s))
            # drop one edge from the maximal completion: a near miss for the equivalence
            full = _complete_triangle_free(s)
            if full.edges:
                add(full.remove_edge(*full.edges[0]))
    return out


# -- census ----------------------------------------------------------------------

PREDICATES = FLAG_NAMES + ("two_connected", "odd")
# evaluation order: cheap structural filters first, then matching work
_PRED_ORDER = ("odd", "bipartite", "two_connected", "factor_critical", "equimatchable", "randomly_matchable", "efc", "ece", "vce", "ese", "well_covered")


def _pred_value(f: Facts, name: str) -> bool:
    if name == "odd":
        return f.n % 2 == 1
    if name == "bipartite":
        return f.bip is not None
    if name == "two_connected":
        return f.two_connected
    if name == "factor_critical":
        return f.fc
    if name == "equimatchable":
        return bool(f.equim)
    if name == "randomly_matchable":
        return f.randomly_matchable
    if name == "efc":
        return f.efc
    if name == "ece":
        return f.m >= 1 and f.ece
    if name == "vce":
        return f.m >= 1 and f.vce
    if name == "ese":
        return f.m >= 1 and f.ese
    if name == "well_covered":
        return f.m >= 1 and is_well_covered(line_graph(f.g)[0])
    raise ValueError(f"unknown predicate {name!r}")


@dataclass
class CensusRecord:
    graph6: str
    report: dict[str, Any]
    family: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps({"family": self.family, "graph6": self.graph6, "report": self.report}, sort_keys=True, separators=(",", ":"))


def _check_predicates(preds: Sequence[str]) -> list[str]:
    unknown = [p for p in preds if p not in PREDICATES]
    if unknown:
        raise ValueError(f"unknown predicate(s): {', '.join(unknown)}; known: {', '.join(PREDICATES)}")
    return sorted(set(preds), key=_PRED_ORDER.index)


def _family_labels(f: Facts) -> dict[str, str]:
    fam: dict[str, str] = {}
    if f.efc and f.m >= 1:
        fam["efc"] = classify_efc(f.g).label
    if f.fc and f.m >= 1 and f.ece:
        if f.kappa == 2 and f.n >= 7:
            found = classify_conn2_all(f.g)
            if found:
                fam["conn2"] = str(found[0].descriptor)
        elif f.kappa == 3:
            found3 = classify_conn3_all(f.g)
            if found3:
                fam["conn3"] = str(found3[0].descriptor)
    return fam


def _census_shard(args: tuple[tuple[str, ...], tuple[str, ...], int, int]) -> list[str]:
    graphs, preds, workers, index = args
    flags = [p for p in preds if p in FLAG_NAMES]
    out = []
    for s in graphs:
        if workers > 1 and zlib.crc32(s.encode()) % workers != index:
            continue
        f = Facts(parse_graph6(s))
        if all(_pred_value(f, p) for p in preds):
            rep = property_report(f.g, flags).to_dict()
            out.append(CensusRecord(s, rep, _family_labels(f)).to_json())
    return out


def _map_shards(fn: Callable[[Any], list[Any]], payload: Callable[[int, int], Any], workers: int) -> list[Any]:
    if workers <= 1:
        return fn(payload(1, 0))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(fn, [payload(workers, i) for i in range(workers)])
        return [x for part in parts for x in part]


def run_census(n: int, predicates: Sequence[str], workers: int = 1, source: Sequence[str] | None = None) -> list[CensusRecord]:
    """Connected graphs on ``n`` vertices satisfying every predicate, sorted by canonical string.

    ``source`` replaces the built-in enumeration by an external list of graph6
    strings (they are used as given, so they should be canonical and distinct).
    """
    preds = tuple(_check_predicates(predicates))
    graphs = tuple(source) if source is not None else connected_graph6(n, workers)
    lines = _map_shards(_census_shard, lambda w, i: (graphs, preds, w, i), workers)
    records = []
    for line in sorted(lines, key=lambda s: json.loads(s)["graph6"]):
        d = json.loads(line)
        records.append(CensusRecord(d["graph6"], d["report"], d["family"]))
    return records


# -- verification -------------------------------------------------------------------


@dataclass
class VerifyReport:
    theorem_id: str
    claim: str
    n_max: int
    scanned: int
    counterexamples: list[dict[str, str]]
    total_counterexamples: int
    cap: int
    elapsed: float
    conjecture_grade: bool = False

    @property
    def passed(self) -> bool:
        return self.total_counterexamples == 0

    @property
    def cap_hit(self) -> bool:
        return self.total_counterexamples > len(self.counterexamples)

    def to_dict(self) -> dict[str, Any]:
        d = {
            "cap": self.cap,
            "cap_hit": self.cap_hit,
            "claim": self.claim,
            "conjecture_grade": self.conjecture_grade,
            "counterexamples": self.counterexamples,
            "elapsed_seconds": round(self.elapsed, 3),
            "n_max": self.n_max,
            "passed": self.passed,
            "scanned": self.scanned,
            "theorem_id": self.theorem_id,
            "total_counterexamples": self.total_counterexamples,
        }
        if self.conjecture_grade:
            d["note"] = "depends on an unpublished cited manuscript; conjecture-grade"
        return d


def _verify_shard(args: tuple[tuple[str, ...], tuple[str, ...], int, int]) -> list[tuple[str, int, str, str]]:
    """(theorem id, 1 if scanned else 0, graph6, clause) rows for one shard."""
    graphs, ids, workers, index = args
    rows: list[tuple[str, int, str, str]] = []
    checks = [(tid, REGISTRY[tid]) for tid in ids]
    for s in graphs:
        if workers > 1 and zlib.crc32(s.encode()) % workers != index:
            continue
        f = Facts(parse_graph6(s))
        for tid, th in checks:
            if th.max_order is not None and f.n > th.max_order:
                continue
            assert th.check is not None
            rows.append((tid, 1, s, ""))
            try:
                for clause in th.check(f):
                    rows.append((tid, 0, s, clause))
            except InconsistencyError as exc:
                rows.append((tid, 0, s, f"internal cross-check failed: {exc}"))
    return rows


def verify_many(ids: Sequence[str], n_max: int, workers: int = 1, cap: int = DEFAULT_CAP) -> dict[str, VerifyReport]:
    """Run several registry entries in one pass over the census up to ``n_max``."""
    unknown = [t for t in ids if t not in REGISTRY]
    if unknown:
        raise KeyError(f"unregistered theorem id(s): {', '.join(unknown)}")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    ids = list(dict.fromkeys(ids))
    census_ids = tuple(t for t in ids if REGISTRY[t].check is not None)
    reports: dict[str, VerifyReport] = {}
    if census_ids:
        start = time.perf_counter()
        scanned = {t: 0 for t in census_ids}
        fails: dict[str, list[tuple[int, str, str]]] = {t: [] for t in census_ids}
        for n in range(1, n_max + 1):
            graphs = connected_graph6(n, workers)
            rows = _map_shards(_verify_shard, lambda w, i: (graphs, census_ids, w, i), workers)
            for tid, is_scan, s, clause in rows:
                if is_scan:
                    scanned[tid] += 1
                else:
                    fails[tid].append((n, s, clause))
        elapsed = time.perf_counter() - start
        for tid in census_ids:
            reports[tid] = _make_report(tid, n_max, scanned[tid], fails[tid], cap, elapsed)
    for tid in ids:
        th = REGISTRY[tid]
        if th.instances is None:
            continue
        start = time.perf_counter()
        count = 0
        found: list[tuple[int, str, str]] = []
        for s, clauses in th.instances(n_max):
            count += 1
            found.extend((0, s, c) for c in clauses)
        reports[tid] = _make_report(tid, n_max, count, found, cap, time.perf_counter() - start)
    return {t: reports[t] for t in ids}


def _make_report(tid: str, n_max: int, scanned: int, fails: list[tuple[int, str, str]], cap: int, elapsed: float) -> VerifyReport:
    th = REGISTRY[tid]
    ordered = sorted(fails)
    shown = [{"clause": c, "graph6": s} for _, s, c in ordered[:cap]]
    return VerifyReport(tid, th.claim, n_max, scanned, shown, len(ordered), cap, elapsed, th.conjecture_grade)


def verify(theorem_id: str, n_max: int, workers: int = 1, cap: int = DEFAULT_CAP) -> VerifyReport:
    """Re-check one registered claim on every eligible graph up to ``n_max`` vertices."""
    if theorem_id not in REGISTRY:
        raise KeyError(f"unregistered theorem id {theorem_id!r}")
    return verify_many([theorem_id], n_max, workers, cap)[theorem_id]
