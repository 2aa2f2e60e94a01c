"""Acceptance criteria 1-9, each reported as one PASS / FAIL line.

Criterion 4 (the full n = 9 deep check) is opt-in: set CRITMATCH_DEEP=1.
Run with ``pytest tests/test_acceptance.py -v`` (the summary lines appear at
the end of the session) or directly as ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import io
import os
import random
import time
from contextlib import redirect_stderr, redirect_stdout

import pytest

from conftest import brute_connectivity, brute_nu, connected_counts
from critmatch.canon import canonical_graph6
from critmatch.census import REGISTRY, verify_many
from critmatch.cli import main as cli_main
from critmatch.enumerate import connected_graph6
from critmatch.families import CONN2_KINDS, CONN3_KINDS, descriptors, generate
from critmatch.graph import emit_graph6, parse_graph6, vertex_connectivity
from critmatch.matching import is_factor_critical, max_matching_size
from critmatch.properties import is_ECE, is_ESE

DEEP = os.environ.get("CRITMATCH_DEEP", "") not in ("", "0")
RESULTS: dict[int, str] = {}


def record(k: int, ok: bool, detail: str) -> None:
    RESULTS[k] = f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(RESULTS[k])


def _census_lines(n: int, pred: str) -> list[str]:
    out = io.StringIO()
    with redirect_stdout(out), redirect_stderr(io.StringIO()):
        code = cli_main(["census", "--n", str(n), "--pred", pred])
    assert code == 0
    return out.getvalue().splitlines()


def _failures(reports) -> dict[str, int]:
    return {tid: r.total_counterexamples for tid, r in reports.items() if not r.passed}


def test_criterion_1_order_seven_census():
    start = time.perf_counter()
    lines = _census_lines(7, "factor_critical,ece")
    elapsed = time.perf_counter() - start
    ok = len(lines) == 4 and elapsed < 60
    record(1, ok, f"census --n 7 --pred factor_critical,ece gave {len(lines)} graphs (expected 4) in {elapsed:.1f}s")
    assert len(lines) == 4
    assert elapsed < 60


def test_criterion_2_minimum_order():
    counts = {n: len(_census_lines(n, "factor_critical,ece")) for n in (3, 5)}
    ok = counts == {3: 0, 5: 0}
    record(2, ok, f"factor-critical ECE counts {counts}")
    assert ok


def test_criterion_3_registry_up_to_eight():
    start = time.perf_counter()
    reports = verify_many(list(REGISTRY), 8)
    elapsed = time.perf_counter() - start
    bad = _failures(reports)
    ok = not bad and elapsed < 15 * 60
    record(3, ok, f"{len(reports)} registered claims at n <= 8, failures {bad or 'none'}, {elapsed:.0f}s")
    assert not bad
    assert elapsed < 15 * 60


@pytest.mark.skipif(not DEEP, reason="opt-in: set CRITMATCH_DEEP=1")
def test_criterion_4_deep_check_order_nine():
    start = time.perf_counter()
    graphs = connected_graph6(9)
    oracle = connected_counts(9)[9]
    ids = ["vce-characterization", "conn2-characterization", "isolating-structure", "one-exposed"]
    reports = verify_many(ids, 9)
    elapsed = time.perf_counter() - start
    bad = _failures(reports)
    ok = len(graphs) == oracle == 261080 and not bad and elapsed < 2 * 3600
    record(4, ok, f"{len(graphs)} graphs on 9 vertices (oracle {oracle}), failures {bad or 'none'}, {elapsed:.0f}s")
    assert len(graphs) == oracle == 261080
    assert not bad
    assert elapsed < 2 * 3600


def test_criterion_5_generator_soundness():
    start = time.perf_counter()
    bad = []
    count = 0
    for kind in CONN2_KINDS + CONN3_KINDS:
        want = 2 if kind in CONN2_KINDS else 3
        for d in descriptors(kind, 13):
            g = generate(d).graph
            count += 1
            if not (is_factor_critical(g) and is_ECE(g) and vertex_connectivity(g) == want):
                bad.append(str(d))
    elapsed = time.perf_counter() - start
    ok = not bad and count > 0 and elapsed < 600
    record(5, ok, f"{count} descriptors of order <= 13, unsound {bad or 'none'}, {elapsed:.0f}s")
    assert not bad and count > 0


def test_criterion_6_family_relations():
    bad = []
    count = 0
    for kind in ("famA", "famB", "famC", "famD", "famE"):
        for d in descriptors(kind, 11):
            g = generate(d).graph
            count += 1
            if bool(is_ESE(g)) != (kind in ("famC", "famD")):
                bad.append(f"{d}: ESE")
            if kind != "famE" and is_ECE(g):
                bad.append(f"{d}: ECE")
    record(6, not bad, f"{count} family instances of order <= 11, violations {bad or 'none'}")
    assert not bad


def test_criterion_7_line_graph_bridge():
    start = time.perf_counter()
    rep = verify_many(["linegraph-bridge"], 6)["linegraph-bridge"]
    elapsed = time.perf_counter() - start
    ok = rep.passed and elapsed < 300
    record(7, ok, f"{rep.scanned} graphs with n <= 6, {rep.total_counterexamples} violations, {elapsed:.1f}s")
    assert rep.passed


def test_criterion_8_oracle_equivalences():
    bad = []
    small = [parse_graph6(s) for n in range(1, 8) for s in connected_graph6(n)]
    for g in small:
        if max_matching_size(g) != brute_nu(g.edges):
            bad.append(f"nu {g}")
        if g.n >= 2 and vertex_connectivity(g) != brute_connectivity(g):
            bad.append(f"connectivity {g}")
    rng = random.Random(2024)
    for s in rng.sample([s for n in range(5, 9) for s in connected_graph6(n)], 300):
        g = parse_graph6(s)
        for _ in range(20):
            perm = list(range(g.n))
            rng.shuffle(perm)
            if canonical_graph6(g.relabel(perm)) != s:
                bad.append(f"canonical {s}")
                break
    round_trips = 0
    for n in range(1, 9):
        for s in connected_graph6(n):
            round_trips += 1
            if emit_graph6(parse_graph6(s)) != s:
                bad.append(f"graph6 {s}")
    record(8, not bad, f"{len(small)} graphs for nu/connectivity, 300x20 relabelings, {round_trips} round trips, violations {bad[:5] or 'none'}")
    assert not bad


def test_criterion_9_appendix_checks():
    reports = verify_many(["appendix-two-components", "appendix-conn4-equiv"], 9)
    bad = _failures(reports)
    detail = ", ".join(f"{tid}: {r.scanned} scanned" for tid, r in reports.items())
    record(9, not bad, f"conjecture-grade (unpublished cited manuscript); {detail}; failures {bad or 'none'}")
    assert not bad


if __name__ == "__main__":
    import sys

    raise SystemExit(pytest.main([__file__, "-q", "-s", *sys.argv[1:]]))
