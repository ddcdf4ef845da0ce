import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from mirrorlat import __version__
from mirrorlat.cli import main, parse_config, run
from mirrorlat.polys import parse_rational

GOLDEN = Path(__file__).parent / "golden"


def invoke(*argv):
    code, text = run(parse_config(list(argv)))
    return code, text


def doc(*argv):
    code, text = invoke(*argv)
    return code, json.loads(text)


@pytest.mark.parametrize("which", [1, 2, 3])
def test_tables_match_golden(which):
    code, text = invoke("tables", "--which", str(which))
    assert code == 0
    assert text == (GOLDEN / f"table{which}.json").read_text()


def test_table3_golden_flags_d4():
    cells = json.loads((GOLDEN / "table3.json").read_text())["result"]
    d4 = next(c for c in cells if (c["family"], c["rank"]) == ("D", 4))
    assert d4["known_discrepancy"] is True
    assert all(c["known_discrepancy"] is False for c in cells if c is not d4)


def test_table_shapes():
    t1 = json.loads((GOLDEN / "table1.json").read_text())["result"]
    assert sorted(t1) == ["E6", "E7", "E8"]
    assert [len(t1[name]) for name in ("E6", "E7", "E8")] == [6, 7, 8]
    rows = json.loads((GOLDEN / "table2.json").read_text())["result"]
    assert [r["family"] for r in rows] == list("ABCDEFG")


def test_tables_threads_do_not_change_output(monkeypatch):
    monkeypatch.setenv("MIRRORLAT_THREADS", "4")
    _, text = invoke("tables", "--which", "3")
    assert text == (GOLDEN / "table3.json").read_text()


def test_envelope_and_seed():
    code, out = doc("flatness", "--family", "B", "--rank", "3", "--seed", "17", "--samples", "3")
    assert code == 0
    assert set(out) == {"tool_version", "seed", "command", "result"}
    assert out["tool_version"] == __version__ and out["seed"] == 17 and out["command"] == "flatness"
    assert len(out["result"]) == 3 and all(r["all_hold"] for r in out["result"])


def test_determinism():
    argv = ("curvature", "--family", "G", "--rank", "2", "--k", "1/5", "--kp", "1/7", "--seed", "3")
    assert invoke(*argv) == invoke(*argv)
    assert invoke("flatness", "--family", "A", "--rank", "3", "--seed", "9")[1] == \
        invoke("flatness", "--family", "A", "--rank", "3", "--seed", "9")[1]


def test_enumerate_a2():
    code, out = doc("enumerate", "--family", "A", "--rank", "2")
    assert code == 0
    p5 = {parse_rational(e["kp"]) for e in out["result"] if e["p"] == 5}
    assert p5 == {s * Fraction(v) for v in ("1/30", "1/15", "11/90", "7/30") for s in (1, -1)}


def test_residues_e7_node4():
    code, out = doc("residues", "--family", "E", "--rank", "7", "--node", "4")
    assert code == 0
    (row,) = out["result"]
    assert row["eigenvalues"] == [{"value": {"const": "0", "k": "-12", "kp": "0"}, "multiplicity": 8}]
    assert row["quadratic_identity"] is True


def test_flatness_d4():
    code, out = doc("flatness", "--family", "D", "--rank", "4", "--k", "1/6", "--kp", "0")
    assert code == 0
    assert all(c["holds"] for c in out["result"][0]["conditions"].values())


def test_rationals_round_trip():
    _, out = doc("schwarz", "--family", "B", "--rank", "2", "--k", "1/6", "--kp", "1/6")
    values = [parse_rational(v) for v in out["result"]["exponents"]["toric"]]
    assert values == [Fraction(0), Fraction(1, 6)]
    assert out["result"]["satisfied"] and out["result"]["hyperbolic"]
    _, out = doc("schwarz", "--family", "A", "--rank", "2", "--k", "1/6", "--kp", "-1/7")
    assert [parse_rational(v) for v in out["result"]["exponents"]["toric"]] == [Fraction(25, 84),
                                                                                Fraction(-11, 84)]


def test_gram_and_signature():
    _, out = doc("signature", "--family", "A", "--rank", "2", "--k", "1/6", "--kp", "0")
    assert out["result"]["signature"] == [2, 1, 0]
    assert out["result"]["dual_signature"] == [1, 2, 0]
    _, out = doc("gram", "--family", "A", "--rank", "2", "--k", "1/6")
    assert len(out["result"]["entries"]) == 3 and len(out["result"]["entries"][0][0]) == 2
    _, out = doc("hyp-region", "--family", "B", "--rank", "2", "--k", "1/6", "--kp", "1/6")
    assert out["result"] == {"hyperbolic": True, "xy": {"x": "1/6", "y": "1/3"}}


def test_info_and_wronskian():
    _, out = doc("info", "--family", "F", "--rank", "4")
    assert out["result"]["positive_roots"] == 24
    code, out = doc("wronskian", "--family", "A", "--rank", "2", "--k", "1/6", "--samples", "2")
    assert code == 0 and out["result"]["max"] < 1e-6


def test_csv_and_markdown():
    code, text = invoke("enumerate", "--family", "G", "--rank", "2", "--format", "csv")
    lines = text.splitlines()
    assert code == 0 and lines[0].startswith("# mirrorlat") and lines[1].startswith("family,rank,k,p")
    code, text = invoke("tables", "--which", "3", "--format", "md")
    assert "known_discrepancy" in text and "### type A" in text
    _, text = invoke("tables", "--which", "2", "--format", "md")
    assert text.count("\n| ") == 8


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    assert main(["hyp-region", "--family", "E", "--rank", "7", "--k", "1/6", "--output", str(target)]) == 0
    assert json.loads(target.read_text())["result"]["hyperbolic"] is True
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize("argv,needle", [
    (["flatness", "--family", "A", "--rank", "2", "--k", "1/2x"], "1/2x"),
    (["flatness", "--family", "H", "--rank", "3"], "supported"),
    (["flatness", "--family", "A", "--rank", "12"], "supported"),
    (["residues", "--family", "A"], "--rank"),
    (["tables"], "--which"),
    (["gram", "--family", "A", "--rank", "2", "--k", "1/2"], "1/2"),
    (["bogus"], "invalid choice"),
])
def test_usage_errors(argv, needle, capsys):
    assert main(argv) == 1
    assert needle in capsys.readouterr().err


def test_check_failure_exit_code(monkeypatch):
    import mirrorlat.cli as cli

    monkeypatch.setattr(cli, "CURVATURE_TOL", 0.0)
    code, _ = invoke("curvature", "--family", "B", "--rank", "2", "--k", "1/5", "--kp", "1/7", "--samples", "2")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mirrorlat", "hyp-region", "--family", "A", "--rank", "2",
                           "--k", "1/6", "--kp", "1/6"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["result"]["hyperbolic"] is False
    proc = subprocess.run([sys.executable, "-m", "mirrorlat", "info", "--family", "A", "--rank", "0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 1 and proc.stderr.startswith("mirrorlat: error")
