import json
import subprocess
import sys

import pytest

from tamari import Poset, tamari_poset
from tamari.io import (
    document_to_poset,
    dumps_document,
    dumps_report,
    poset_document,
    poset_to_dot,
)
from tamari.theorems import verify_level_sums


def run_cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "tamari", *args],
        capture_output=True,
        timeout=300,
    )


# -- documents ---------------------------------------------------------------------


def test_document_fields():
    p = tamari_poset("b", 2)
    doc = poset_document(p, kind="tamari_b", n=2, levels=p.level_map("lowest"))
    assert list(doc) == ["format_version", "kind", "n", "elements", "covers", "levels"]
    assert doc["format_version"] == 1
    assert doc["elements"][0] == "(0,0)"
    assert doc["levels"]["0"] == 0
    assert all(len(c) == 2 for c in doc["covers"])


def test_document_round_trip():
    p = tamari_poset("b", 3)
    doc = poset_document(p, kind="tamari_b", n=3, levels=p.level_map("lowest"))
    doc2 = json.loads(dumps_document(doc))
    q = document_to_poset(doc2)
    assert q.labels == doc["elements"]
    assert (q.leq_matrix == p.leq_matrix).all()


def test_document_without_covers_cannot_rebuild():
    p = tamari_poset("b", 2)
    doc = poset_document(p, kind="tamari_b", n=2, include_covers=False)
    assert "covers" not in doc
    with pytest.raises(ValueError):
        document_to_poset(doc)


def test_document_rejects_bad_version():
    with pytest.raises(ValueError):
        document_to_poset({"format_version": 99, "elements": [], "covers": []})


def test_document_rejects_comparable_level_fiber():
    doc = {
        "format_version": 1,
        "kind": "generic",
        "elements": ["a", "b"],
        "covers": [[0, 1]],
        "levels": {"0": 0, "1": 0},
    }
    with pytest.raises(ValueError):
        document_to_poset(doc)


def test_report_document_shape():
    text = dumps_report(verify_level_sums(2))
    doc = json.loads(text)
    assert doc["claim"] == "lemma1"
    assert doc["n"] == 2
    assert doc["status"] == "verified"
    assert "witness" not in doc


# -- DOT -----------------------------------------------------------------------------


def test_dot_single_node():
    p = Poset.from_predicate(["only"], lambda a, b: True)
    text = poset_to_dot(p)
    assert 'n0 [label="only"];' in text
    assert "->" not in text


def test_dot_t2b_counts():
    p = tamari_poset("b", 2)
    text = poset_to_dot(p, name="t", levels=p.level_map("lowest"))
    assert text.count("label=") == 6
    assert text.count("->") == len(p.covers) == 6
    assert text.count("rank=same") == 5


# -- CLI ------------------------------------------------------------------------------


def test_cli_enumerate_count():
    result = run_cli("enumerate", "--type", "b", "--n", "2", "--format", "count")
    assert result.returncode == 0
    assert result.stdout == b"6\n"


def test_cli_enumerate_count_type_a():
    result = run_cli("enumerate", "--type", "a", "--n", "3", "--format", "count")
    assert result.stdout == b"5\n"


def test_cli_enumerate_list_n1():
    result = run_cli("enumerate", "--type", "b", "--n", "1")
    assert result.stdout == b"(0)\n(inf)\n"


def test_cli_enumerate_json_hasse():
    result = run_cli(
        "enumerate", "--type", "b", "--n", "2", "--format", "json", "--hasse"
    )
    doc = json.loads(result.stdout)
    assert doc["kind"] == "tamari_b"
    assert len(doc["elements"]) == 6
    assert len(doc["covers"]) == 6


def test_cli_lambda_full():
    result = run_cli("lambda", "--type", "b", "--n", "2")
    assert result.stdout == b"[5, 1]\n"


def test_cli_lambda_k():
    result = run_cli("lambda", "--type", "b", "--n", "4", "--k", "1")
    lines = result.stdout.decode().splitlines()
    assert lines[0] == "17"
    result = run_cli("lambda", "--type", "b", "--n", "4", "--k", "2")
    assert result.stdout.decode().splitlines()[0] == "29"


def test_cli_verify_exit_codes():
    result = run_cli("verify", "--claim", "thm1", "--n", "4..6")
    assert result.returncode == 0
    reports = [json.loads(line) for line in result.stdout.splitlines()]
    assert [r["status"] for r in reports] == ["verified"] * 3

    result = run_cli("verify", "--claim", "thm1", "--n", "3")
    assert result.returncode == 0
    assert json.loads(result.stdout)["status"] == "skipped"

    result = run_cli("verify", "--claim", "lemma1", "--n", "2")
    assert json.loads(result.stdout)["status"] == "verified"

    result = run_cli("verify", "--claim", "remarks", "--n", "2..3")
    assert result.returncode == 0
    reports = [json.loads(line) for line in result.stdout.splitlines()]
    assert len(reports) == 6
    assert all(r["status"] != "refuted" for r in reports)


def test_cli_export_json_has_levels_only_when_asked(tmp_path):
    out = tmp_path / "t4.json"
    result = run_cli(
        "export", "--type", "b", "--n", "4", "--format", "json",
        "--layout", "lowest", "--out", str(out),
    )
    assert result.returncode == 0
    doc = json.loads(out.read_text())
    assert len(doc["elements"]) == 70
    assert "levels" in doc

    result = run_cli("export", "--type", "b", "--n", "4", "--format", "json")
    assert "levels" not in json.loads(result.stdout)


def test_cli_export_dot(tmp_path):
    result = run_cli("export", "--type", "b", "--n", "2", "--format", "dot")
    text = result.stdout.decode()
    assert text.count("label=") == 6
    assert text.count("->") == 6


def test_cli_export_unwritable_path():
    result = run_cli(
        "export", "--type", "b", "--n", "2", "--format", "dot",
        "--out", "/nonexistent-dir/x.dot",
    )
    assert result.returncode == 1
    assert b"error" in result.stderr


def test_cli_rejects_bad_n():
    assert run_cli("enumerate", "--type", "b", "--n", "0").returncode != 0
    assert run_cli("enumerate", "--type", "b", "--n", "x").returncode != 0
    assert run_cli("enumerate", "--type", "c", "--n", "2").returncode != 0
    assert run_cli("verify", "--claim", "lemma1", "--n", "1").returncode == 2


def test_cli_cap_and_force():
    result = run_cli("enumerate", "--type", "b", "--n", "8", "--format", "count")
    assert result.returncode != 0
    result = run_cli(
        "enumerate", "--type", "b", "--n", "8", "--format", "count", "--force"
    )
    assert result.returncode == 0
    assert result.stdout == b"12870\n"
    assert b"warning" in result.stderr


def test_cli_poset_commands_stop_at_poset_cap():
    # poset-backed commands build dense matrices; --force does not lift them
    result = run_cli("lambda", "--type", "b", "--n", "8", "--force")
    assert result.returncode != 0
    assert b"poset cap" in result.stderr
    result = run_cli(
        "enumerate", "--type", "b", "--n", "8", "--format", "json", "--hasse", "--force"
    )
    assert result.returncode != 0


def test_tamari_poset_cap():
    with pytest.raises(ValueError):
        tamari_poset("b", 8)
    with pytest.raises(ValueError):
        tamari_poset("c", 3)
