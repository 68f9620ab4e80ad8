import json
import subprocess
import sys
from pathlib import Path

import pytest

from ringline.cli import SCHEMA, main

ROOT = Path(__file__).resolve().parents[1]
SAMPLE = ROOT / "samples" / "z4_on_gf2.json"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None), out


def test_ring_report(capsys):
    code, rep, _ = run(capsys, "ring", "Z/6")
    assert code == 0 and rep["schema"] == SCHEMA
    sec = rep["sections"]["ring"]
    assert sec["units"] == ["1", "5"] and sec["radical"] == ["0"]
    assert sec["dedekind_finite"] and sec["stable_rank_2"]


def test_ring_errors(capsys):
    code, rep, _ = run(capsys, "ring", "GF(6)")
    assert code == 2 and "prime power" in rep["error"]
    code, _, _ = run(capsys, "ring")
    assert code == 2


def test_trivial_ring(capsys):
    code, rep, _ = run(capsys, "ring", "Z/1")
    assert code == 0 and rep["ok"]


def test_pline_dot(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    code, rep, _ = run(capsys, "pline", "Z/4", "--dot", str(dot))
    assert code == 0 and rep["sections"]["pline"]["size"] == 6
    assert dot.read_text().startswith("graph distant {")
    code, rep, _ = run(capsys, "pline", "GF(3)")
    assert rep["sections"]["pline"]["graph"]["complete"]


def test_pline_ceiling_notice(capsys):
    code, rep, _ = run(capsys, "pline", "M2(GF(3))")
    sec = rep["sections"]["pline"]
    assert code == 0 and sec["size"] == 130 and "skipped" in sec["notice"]
    assert sec["ge2"]["e2_orbit_equals_pline"]


def test_hom(capsys):
    code, rep, _ = run(capsys, "hom", "Z/6", "Z/2")
    assert code == 0 and rep["sections"]["hom"]["reflects_distance"] is False
    code, rep, _ = run(capsys, "hom", "Dual(GF(2))", "GF(2)", "--images", "0,1,0,1")
    assert code == 0 and rep["sections"]["hom"]["reflects_distance"] is True
    code, _, _ = run(capsys, "hom", "Dual(GF(2))", "GF(2)")
    assert code == 2


def test_rep(capsys):
    code, rep, _ = run(capsys, "rep", "Dual(GF(2))", "--regular")
    assert code == 0 and rep["sections"]["rep"]["model"]["faithful"]
    code, rep, _ = run(capsys, "rep", "Z/4", "--table", str(SAMPLE))
    sec = rep["sections"]["rep"]
    assert code == 0 and not sec["model"]["faithful"] and sec["factor_representation"]["equal"]
    code, _, _ = run(capsys, "rep", "Z/4", "--regular")
    assert code == 2
    code, rep, _ = run(capsys, "rep", "Z/6", "--reduction", "2")
    assert code == 0 and rep["sections"]["rep"]["verification"]["unit_condition"] is False


def test_geometry_and_demo(capsys):
    code, rep, _ = run(capsys, "geometry", "5.1", "--q", "3")
    assert code == 0 and rep["sections"]["geometry"]["family"]["count"] == 4
    code, rep, _ = run(capsys, "geometry", "5.5", "--q", "2")
    # model has 18 lines; the documented count 19 includes U'U' itself
    assert code == 1 and rep["sections"]["geometry"]["family"]["count"] == 18
    code, rep, _ = run(capsys, "demo", "poly", "--p", "3", "--samples", "100", "--seed", "7")
    assert code == 0
    code, rep, _ = run(capsys, "demo", "ZQ", "--height", "10")
    assert code == 0
    code, _, _ = run(capsys, "demo", "nope")
    assert code == 2


def test_out_file(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert main(["ring", "GF(4)", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["sections"]["ring"]["size"] == 4


@pytest.mark.parametrize("argv", [["rep", "EpsDelta(GF(2))"], ["hom", "Z/4", "Z/2"],
                                  ["geometry", "5.6", "--q", "2"]])
def test_subprocess_byte_identical(argv):
    cmd = [sys.executable, "-m", "ringline", *argv]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout
