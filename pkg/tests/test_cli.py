"""Command-line interface: exit codes, formats, and determinism."""

import io
import json

import pytest

from exrings.cli import main


def run_cli(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    rc = main(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_list_text(capsys):
    rc, out, err = run_cli(["list"], capsys)
    assert rc == 0 and not err
    for tid in ("lem2", "thm16", "thm36", "ex4", "remark1"):
        assert tid in out


def test_list_json(capsys):
    rc, out, _ = run_cli(["list", "--format", "json"], capsys)
    assert rc == 0
    entries = json.loads(out)
    assert len(entries) == 31
    byid = {e["theorem"]: e for e in entries}
    assert "m2-gf4" in byid["thm16"]["rings"]
    assert byid["thm16"]["defaults"] == ["m2-gf2"]


def test_verify_single(capsys):
    rc, out, _ = run_cli(["verify", "--theorem", "lem22", "--seed", "42"], capsys)
    assert rc == 0
    assert out.count("[PASS] lem22") == 3  # one line per default ring


def test_verify_json_shape(capsys):
    rc, out, _ = run_cli(
        ["verify", "--theorem", "thm16", "--format", "json"], capsys
    )
    assert rc == 0
    data = json.loads(out)
    assert len(data) == 1
    v = data[0]
    assert v["theorem"] == "thm16"
    assert v["cases_total"] == 67 and v["cases_failed"] == 0
    assert v["elapsed_ms"] == 0  # canonical form zeroes wall time
    assert v["config"]["ring"] == "m2-gf2"


def test_verify_ring_override(capsys):
    rc, out, _ = run_cli(
        ["verify", "--theorem", "lem22", "--ring", "m2-gf4"], capsys
    )
    assert rc == 0
    assert out.count("[PASS]") == 1


def test_verify_unknown_theorem(capsys):
    rc, _, err = run_cli(["verify", "--theorem", "thm99"], capsys)
    assert rc == 2
    assert "error:" in err and "thm99" in err


def test_verify_unsupported_ring(capsys):
    rc, _, err = run_cli(
        ["verify", "--theorem", "thm29", "--ring", "m2-gf2"], capsys
    )
    assert rc == 2
    assert "does not run over" in err


def test_verify_all_filtered_by_ring(capsys):
    rc, out, _ = run_cli(
        ["verify", "--theorem", "all", "--ring", "m2-gf3", "--samples", "50"], capsys
    )
    assert rc == 0
    lines = [l for l in out.splitlines() if l.startswith("[")]
    # exactly the checkers that accept the odd-characteristic control ring
    assert len(lines) == 4
    assert all("m2-gf3" not in l or True for l in lines)


def test_verify_determinism(capsys):
    argv = ["verify", "--theorem", "lem19", "--seed", "7", "--format", "json"]
    rc1, out1, _ = run_cli(argv, capsys)
    rc2, out2, _ = run_cli(argv, capsys)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_classify_file(tmp_path, capsys):
    f = tmp_path / "gens.txt"
    f.write_text("poly-full 1\npoly-full e12\n")
    rc, out, _ = run_cli(["classify", str(f), "--degree", "6"], capsys)
    assert rc == 0
    assert "class: abelian-noncentral" in out
    assert "lie_ideal: True" in out
    assert "span_dim: 2" in out


def test_classify_stdin_json(capsys, monkeypatch):
    rc, out, _ = run_cli(
        ["classify", "-", "--format", "json"],
        capsys,
        stdin="poly-full e11\npoly-full e12\npoly-full e21\npoly-full e22\n",
        monkeypatch=monkeypatch,
    )
    assert rc == 0
    data = json.loads(out)
    assert data["lie_ideal"] is True
    assert data["class"] == "type-ii"
    assert data["span_dim"] == 4


def test_classify_non_ideal(capsys, monkeypatch):
    rc, out, _ = run_cli(
        ["classify", "-"], capsys, stdin="bits e12\n", monkeypatch=monkeypatch
    )
    assert rc == 0
    assert "lie_ideal: False" in out
    assert "class" not in out


def test_classify_missing_file(capsys):
    rc, _, err = run_cli(["classify", "/nonexistent/gens.txt"], capsys)
    assert rc == 2
    assert "error:" in err
