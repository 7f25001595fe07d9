"""End-to-end checks of the command-line entry point."""

from __future__ import annotations

import json
from pathlib import Path

from synreg.cli import main

FIXTURES = Path(__file__).parent / "fixtures"
FIG1 = str(FIXTURES / "fig1.ofn")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_prints_category(capsys):
    code, out, err = run(capsys, "classify", str(FIXTURES / "atomic.ofn"))
    assert (code, out, err) == (0, "atomic\n", "")
    code, out, _ = run(capsys, "classify", str(FIXTURES / "rich.ofn"))
    assert (code, out) == (0, "rich\n")


def test_analyze_structured_output(capsys):
    code, out, err = run(capsys, "analyze", FIG1)
    assert code == 0 and err == ""
    data = json.loads(out)
    assert data["id"] == "fig1.ofn"
    assert data["regularities_axioms_G"] == 2
    assert data["hasse_axioms"] == [2, 1]


def test_analyze_tabular_output(capsys):
    code, out, _ = run(capsys, "analyze", FIG1, "--format", "tabular")
    assert code == 0
    header, row = out.strip().split("\n")
    assert header.split(",")[0] == "id"
    assert row.split(",")[0] == "fig1.ofn"


def test_top_lists_largest_regularities(capsys):
    code, out, _ = run(capsys, "top", FIG1, "-k", "1")
    assert code == 0
    assert out == (
        "[axioms]\n"
        "size=2  SubClassOf(*, ObjectIntersectionOf(*, *))\n"
        "[frames]\n"
        "size=2  {SubClassOf(*, ObjectIntersectionOf(*, *))^1}\n"
    )


def test_top_under_internal_structure_abstraction(capsys):
    code, out, _ = run(capsys, "top", FIG1, "--abstraction", "I", "-k", "2")
    assert code == 0
    assert "size=3  SubClassOf(ObjectIntersectionOf)" in out


def test_poset_output(capsys):
    code, out, _ = run(capsys, "poset", FIG1)
    assert code == 0
    axioms, frames = out.split("[frames]\n")
    assert "depth=2\nmax_branching=1\n" in axioms
    assert (
        "SubClassOf(sub=*,super=ObjectIntersectionOf(op=*,op=*))"
        " -> SubClassOf(sub=*,super=ObjectIntersectionOf(op=*,op=*,op=*))\n"
        in axioms
    )
    assert "depth=1\nmax_branching=0\n" in frames


def test_survey_structured_output(capsys):
    code, out, _ = run(capsys, "survey", str(FIXTURES / "corpus"))
    assert code == 0
    data = json.loads(out)
    assert len(data["ontologies"]) == 7
    assert data["ontologies"][0]["id"] == "atomic_c.ofn"
    assert data["common_structures_axioms"][0]["total"] == 7


def test_survey_tabular_output(capsys):
    code, out, _ = run(
        capsys, "survey", str(FIXTURES / "corpus"), "--format", "tabular"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 8
    assert lines[0].split(",")[:2] == ["index", "id"]


def test_output_file_matches_stdout(capsys, tmp_path):
    code, out, _ = run(capsys, "analyze", FIG1)
    target = tmp_path / "report.json"
    code2, out2, _ = run(capsys, "analyze", FIG1, "-o", str(target))
    assert (code, code2) == (0, 0)
    assert out2 == ""
    assert target.read_text(encoding="utf-8") == out


def test_unwritable_output_file(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", FIG1, "-o", str(tmp_path))
    assert code == 2
    assert "cannot write" in err


def test_missing_and_malformed_inputs(capsys, tmp_path):
    code, _, err = run(capsys, "classify", str(tmp_path / "nope.ofn"))
    assert code == 2 and "cannot read" in err

    bad = tmp_path / "bad.ofn"
    bad.write_text("Ontology( SubClassOf(:A", encoding="utf-8")
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 2 and "bad.ofn" in err and "line" in err

    code, _, err = run(capsys, "classify", str(tmp_path))
    assert code == 2 and "directory" in err


def test_usage_errors(capsys):
    code, _, err = run(capsys, "frobnicate", FIG1)
    assert code == 1 and "usage error" in err
    code, _, err = run(capsys, "top", FIG1, "-k", "-2")
    assert code == 1 and "-k" in err
    code, _, err = run(capsys, "analyze", FIG1, "--budget", "lots")
    assert code == 1
    code, _, err = run(capsys, "analyze", FIG1, "--budget", "0")
    assert code == 1


def test_budget_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("SYNREG_BUDGET", "0.000000001")
    code, out, _ = run(capsys, "analyze", FIG1)
    assert code == 0
    assert json.loads(out)["timed_out"] is True

    # an explicit flag overrides the environment
    code, out, _ = run(capsys, "analyze", FIG1, "--budget", "60")
    assert code == 0
    assert json.loads(out)["timed_out"] is False

    monkeypatch.setenv("SYNREG_BUDGET", "plenty")
    code, _, err = run(capsys, "analyze", FIG1)
    assert code == 1 and "SYNREG_BUDGET" in err


def test_poset_respects_budget(capsys):
    code, _, err = run(capsys, "poset", FIG1, "--budget", "1e-9")
    assert code == 1
    assert "timed out" in err


def test_dedup_flag(capsys, tmp_path):
    f = tmp_path / "dups.ofn"
    f.write_text(
        "Prefix(:=<http://x.org/>)\n"
        "Ontology(SubClassOf(:A :B) SubClassOf(:A :B))\n",
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "analyze", str(f))
    assert json.loads(out)["axiom_count"] == 2
    code, out, _ = run(capsys, "analyze", str(f), "--dedup")
    assert json.loads(out)["axiom_count"] == 1
