import json
import math
import subprocess
import sys

import pytest

from dspread.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_p3(capsys):
    code, out, err = run_cli(capsys, "analyze", "Bg", "--alpha", "0")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    (report,) = doc["reports"]
    assert report["n"] == 3
    assert report["wiener"] == 4
    assert report["spread"] == pytest.approx(4.7320508, abs=1e-6)
    assert report["spectrum"][0] == pytest.approx(1 + math.sqrt(3), abs=1e-9)


def test_analyze_star_alpha0(capsys):
    code, out, _ = run_cli(capsys, "analyze", "kbip:1,3", "--alpha", "0")
    doc = json.loads(out)
    assert doc["reports"][0]["spread"] == pytest.approx(4 + math.sqrt(7), abs=1e-9)
    assert code == 0


def test_analyze_grid_spreads(capsys):
    code, out, _ = run_cli(capsys, "analyze", "complete:5", "--alpha-grid", "0,0.5,1")
    doc = json.loads(out)
    assert [r["spread"] for r in doc["reports"]] == pytest.approx([5.0, 2.5, 0.0])
    assert code == 0


def test_analyze_byte_identical(capsys):
    _, out1, _ = run_cli(capsys, "analyze", "kbip:2,3", "--alpha-grid", "0,0.25,1")
    _, out2, _ = run_cli(capsys, "analyze", "kbip:2,3", "--alpha-grid", "0,0.25,1")
    assert out1 == out2


def test_analyze_tsv(capsys):
    code, out, _ = run_cli(capsys, "analyze", "Bg", "--alpha", "0", "--format", "tsv")
    lines = out.strip().splitlines()
    assert lines[0].startswith("input\talpha")
    cells = lines[1].split("\t")
    assert cells[0] == "Bg" and cells[2] == "3"
    assert code == 0


def test_analyze_file_input(capsys, tmp_path):
    p = tmp_path / "graphs.g6"
    p.write_text("# corpus\nBg\nBw\n", encoding="ascii")
    code, out, _ = run_cli(capsys, "analyze", str(p), "--alpha", "0.5")
    doc = json.loads(out)
    assert [r["input"] for r in doc["reports"]] == ["Bg", "Bw"]
    assert code == 0


def test_exit_2_on_parse_error(capsys):
    code, _, err = run_cli(capsys, "analyze", "B" + chr(20), "--alpha", "0")
    assert code == 2 and "error" in err


def test_exit_2_on_bad_family(capsys):
    code, _, err = run_cli(capsys, "analyze", "complete:0", "--alpha", "0")
    assert code == 2 and "error" in err


def test_exit_3_on_disconnected(capsys):
    code, _, err = run_cli(capsys, "analyze", "A?", "--alpha", "0")
    assert code == 3 and "connected" in err


def test_exit_3_on_alpha_range(capsys):
    code, _, err = run_cli(capsys, "analyze", "Bg", "--alpha", "1.5")
    assert code == 3 and "alpha" in err


def test_bounds_k4_equality(capsys):
    code, out, _ = run_cli(capsys, "bounds", "complete:4", "--alpha", "0.5")
    assert code == 0
    doc = json.loads(out)
    (report,) = doc["reports"]
    by_id = {b["bound_id"]: b for b in report["bounds"]}
    assert by_id["thm25_lower"]["equality"] is True
    assert report["clique_number"] == 4
    assert report["independence_number"] == 1
    assert by_id["thm43_independence_lower"]["applicable"] is False


def test_bounds_triangle_inapplicable(capsys):
    code, out, _ = run_cli(capsys, "bounds", "Bw", "--alpha", "0")
    doc = json.loads(out)
    by_id = {b["bound_id"]: b for b in doc["reports"][0]["bounds"]}
    assert by_id["thm35_bipartite_lower"]["reason"] == "not bipartite"
    assert by_id["thm38_bipartite_lower"]["applicable"] is False
    assert code == 0


def test_bounds_star_discrepancy_channel(capsys):
    code, out, _ = run_cli(capsys, "bounds", "kbip:1,3", "--alpha", "0.1")
    assert code == 0  # discrepancies are informational, not violations
    doc = json.loads(out)
    disc = doc["reports"][0]["discrepancies"]
    assert any(d["bound_id"] == "thm35_bipartite_lower" for d in disc)


def test_bounds_tsv(capsys):
    code, out, _ = run_cli(capsys, "bounds", "complete:4", "--alpha", "0.5", "--format", "tsv")
    lines = out.strip().splitlines()
    assert lines[0].startswith("input\talpha\tbound_id")
    assert len(lines) == 1 + 17
    assert code == 0


def test_sweep_shipped_corpus(capsys):
    from importlib import resources

    ref = resources.files("dspread").joinpath("data/bipartite_connected_n4.g6")
    code, out, _ = run_cli(capsys, "sweep", "--corpus", str(ref), "--alphas", "0,0.5,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["graphs_seen"] == 3
    assert doc["violations"] == []


def test_sweep_missing_corpus(capsys):
    code, _, err = run_cli(capsys, "sweep", "--corpus", "missing.g6")
    assert code == 2 and "missing.g6" in err


def test_sweep_seeded_random_deterministic(capsys):
    args = ("sweep", "--seed-random", "6,5,0.5", "--seed", "9", "--alphas", "0,0.5")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["graphs_seen"] == 5


def test_sweep_requires_source(capsys):
    code, _, err = run_cli(capsys, "sweep")
    assert code == 2 and "nothing to sweep" in err


def test_conjecture_n4(capsys):
    code, out, _ = run_cli(capsys, "conjecture", "--n", "4", "--alpha", "0")
    assert code == 0
    doc = json.loads(out)
    assert doc["confirmed"] is True
    assert doc["graphs_seen"] == 3
    assert doc["candidate_min_spread"] == pytest.approx(6.0)


def test_conjecture_byte_identical(capsys):
    _, out1, _ = run_cli(capsys, "conjecture", "--n", "5", "--alpha", "0.5")
    _, out2, _ = run_cli(capsys, "conjecture", "--n", "5", "--alpha", "0.5")
    assert out1 == out2


def test_conjecture_without_packaged_corpus(capsys):
    code, _, err = run_cli(capsys, "conjecture", "--n", "9", "--alpha", "0")
    assert code == 2 and "corpus" in err


def test_spread_tol_env(capsys, monkeypatch):
    monkeypatch.setenv("SPREAD_TOL", "1e-6")
    code, out, _ = run_cli(capsys, "bounds", "complete:4", "--alpha", "0.5")
    assert code == 0
    monkeypatch.setenv("SPREAD_TOL", "banana")
    code, _, err = run_cli(capsys, "bounds", "complete:4", "--alpha", "0.5")
    assert code == 2 and "SPREAD_TOL" in err


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "dspread.cli", "analyze", "Bw", "--alpha", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["reports"][0]["spread"] == 0.0
