from __future__ import annotations

import io
import json

import pytest

from critmatch.canon import canonical_graph6
from critmatch.census import run_census
from critmatch.cli import main
from critmatch.enumerate import connected_graph6
from critmatch.families import generate, parse_descriptor
from critmatch.graph import complete_graph, cycle_graph, parse_graph6, star_graph
from critmatch.properties import property_report


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_c7_all(capsys):
    code, out, _ = run(capsys, "check", str(cycle_graph(7)), "--all")
    rep = json.loads(out)
    assert code == 0
    assert rep["flags"]["ece"] and rep["flags"]["vce"] and not rep["flags"]["ese"]
    # thin wrapper: identical to the library JSON
    assert out.strip() == property_report(cycle_graph(7)).to_json()


def test_check_exit_codes(capsys):
    assert run(capsys, "check", str(complete_graph(4)), "--ece")[0] == 0
    assert run(capsys, "check", str(star_graph(3)), "--equimatchable")[0] == 0
    code, out, _ = run(capsys, "check", str(complete_graph(7)), "--ece")
    assert code == 1 and json.loads(out)["flags"] == {"ece": False}
    code, _, err = run(capsys, "check", "zz")
    assert code == 2 and "error" in err


def test_check_reads_files_and_stdin(capsys, tmp_path, monkeypatch):
    f = tmp_path / "g.txt"
    f.write_text("7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n")
    code, out, _ = run(capsys, "check", str(f), "--ece")
    assert code == 0 and json.loads(out)["flags"]["ece"]
    monkeypatch.setattr("sys.stdin", io.StringIO(str(cycle_graph(7)) + "\n" + str(complete_graph(4)) + "\n"))
    code, out, _ = run(capsys, "check", "-", "--ece")
    assert code == 0 and len(out.splitlines()) == 2


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "typeI p=1 q=1 b1=2")
    d = json.loads(out)
    assert code == 0 and d["n"] == 7
    assert d["graph6"] == str(generate(parse_descriptor("typeI p=1 q=1 b1=2")).graph)
    code, out, _ = run(capsys, "gen", "famC r=2")
    assert parse_graph6(json.loads(out)["graph6"]) == complete_graph(5)
    code, out, err = run(capsys, "gen", "typeV q=2")
    assert code == 2 and out == "" and "q >= 3" in err


def test_census_command(capsys):
    code, out, err = run(capsys, "census", "--n", "7", "--pred", "factor_critical,ece")
    lines = out.splitlines()
    assert code == 0
    assert lines == [r.to_json() for r in run_census(7, ["factor_critical", "ece"])]
    assert "graphs" in err
    code, _, _ = run(capsys, "census", "--n", "5", "--pred", "nonsense")
    assert code == 2
    code, _, _ = run(capsys, "census", "--n", "11", "--pred", "ece")
    assert code == 2


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "plummer-trichotomy", "--n", "6")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "verify", "--list")
    assert "conn2-characterization" in json.loads(out)
    assert run(capsys, "verify", "no-such-claim")[0] == 2
    assert run(capsys, "verify")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    import critmatch.census as census
    import critmatch.cli as cli

    def always_fails(f):
        yield "nope"

    fake = dict(census.REGISTRY)
    fake["always-fails"] = census.Theorem("always-fails", "nothing holds", always_fails)
    monkeypatch.setattr(census, "REGISTRY", fake)
    monkeypatch.setattr(cli, "REGISTRY", fake)
    code, out, _ = run(capsys, "verify", "always-fails", "--n", "3")
    assert code == 1 and json.loads(out)["total_counterexamples"] == 4


def test_convert_round_trip(capsys, tmp_path):
    src = tmp_path / "c6.g6"
    src.write_text("".join(s + "\n" for s in connected_graph6(6)))
    code, edge_text, _ = run(capsys, "convert", str(src), "--to", "edgelist")
    assert code == 0
    mid = tmp_path / "c6.el"
    mid.write_text(edge_text)
    code, back, _ = run(capsys, "convert", str(mid), "--to", "graph6")
    assert back == src.read_text()


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["census", "--n", "x", "--pred", "ece"])
    assert info.value.code == 2
    assert run(capsys, "census", "--n", "5", "--pred", "ece", "--workers", "0")[0] == 2


def test_census_canonical_lines(capsys):
    code, out, _ = run(capsys, "census", "--n", "4", "--pred", "equimatchable")
    for line in out.splitlines():
        s = json.loads(line)["graph6"]
        assert canonical_graph6(parse_graph6(s)) == s
