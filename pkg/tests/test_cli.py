import json
import subprocess
import sys
from fractions import Fraction

import pytest

from tiltlab import io as tio
from tiltlab.cli import main
from tiltlab.lattice import S1


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_proc(*argv):
    return subprocess.run([sys.executable, "-m", "tiltlab", *argv], capture_output=True, check=False)


def test_vertical_wall_prints_bare_rational(capsys):
    code, out, _ = run(capsys, "vertical-wall", "--surface", "S1", "--class", "2,1,0")
    assert code == 0 and out == "1/2\n"
    code, out, _ = run(capsys, "vertical-wall", "--surface", "S1", "--class", "2,1,0", "--format", "json")
    assert json.loads(out) == {"beta0": "1/2"}


def test_euler_and_twist(capsys):
    code, out, _ = run(capsys, "euler", "--surface", "S1", "--class", "1,2,2")
    assert code == 0 and json.loads(out) == {"chi": "6"}
    code, out, _ = run(capsys, "twist", "--surface", "S1", "--class", "1,0,0", "--B", "1")
    assert tio.kclass_from_dict(json.loads(out)) == tio.parse_kclass("1,-1,1/2", S1)


def test_slope_reports_infinity(capsys):
    code, out, _ = run(capsys, "slope", "--surface", "S1", "--class", "0,0,1", "--alpha", "1", "--beta", "0")
    assert code == 0 and json.loads(out) == {"mu_B": "+inf", "nu": "+inf"}


class TestExitCodes:
    def test_bad_class(self, capsys):
        code, _, err = run(capsys, "euler", "--surface", "S1", "--class", "1,x,0")
        assert code == 2 and "error" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "euler", "--surface", str(tmp_path / "nope.json"), "--class", "1,0,0")
        assert code == 2

    def test_missing_required(self, capsys):
        code, _, err = run(capsys, "check-identities", "--surface", "S1", "--class", "2,0,-1")
        assert code == 2 and "--seed" in err

    def test_invalid_surface_is_violation(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text(json.dumps({"rank": 1, "gram": [[1]], "H": ["0"], "K": ["-3"], "chiO": "1"}))
        code, out, _ = run(capsys, "validate-surface", "--surface", str(p))
        assert code == 1 and json.loads(out)["ok"] is False
        code, _, _ = run(capsys, "euler", "--surface", str(p), "--class", "1,0,0")
        assert code == 2

    def test_nonintegral_seshadri(self, capsys):
        code, out, _ = run(capsys, "seshadri", "--surface", "S1", "--F", "2,1", "--g", "2", "--r", "1")
        assert code == 1 and "error" in json.loads(out)
        code, out, _ = run(capsys, "seshadri", "--surface", "S1", "--F", "2,1", "--g", "2", "--least")
        assert code == 0 and json.loads(out)["r"] == 2


def test_check_identities_report(capsys):
    code, out, _ = run(capsys, "check-identities", "--surface", "S1", "--class", "2,0,-1", "--seed", "7")
    assert code == 0
    rep = json.loads(out)
    assert rep["multiplier"] == "1/4"
    assert rep["proportionality_failures"] == [] and rep["other_failures"] == []
    assert all(rep["identity_a2u"].values())


def test_check_identities_deterministic():
    argv = ["check-identities", "--surface", "S2", "--class", "3,1,1,0", "--seed", "99", "--alpha", "1/2", "--B", "1/2,0"]
    a, b = run_proc(*argv), run_proc(*argv)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout


def test_g_class_worked_example(capsys):
    code, out, _ = run(capsys, "g-class", "--surface", "S1", "--class", "2,0,-1", "--a", "4")
    rep = json.loads(out)
    assert code == 0 and rep["G"] == ["8", "16"] and rep["chi_vG"] == "0" and rep["genus"] == 3


def test_flenner(capsys):
    code, out, _ = run(capsys, "flenner", "--surface", "S2", "--rank", "2")
    assert json.loads(out)["a"] == 4


def test_classify(capsys, tmp_path):
    p1, p2 = tmp_path / "m1.json", tmp_path / "m2.json"
    dd = [{"iso_id": "E", "cls": {"ch0": "2", "ch1": ["0"], "ch2": "0"}}]
    p1.write_text(json.dumps({"double_dual": dd, "torsion": {"p": 1}}))
    p2.write_text(json.dumps({"double_dual": dd, "torsion": {"q": 1}}))
    code, out, _ = run(capsys, "classify", "--surface", "S1", "--points", str(p1), "--class", "2,0,-1", "--compare", str(p2))
    rep = json.loads(out)
    assert code == 0 and rep["violations"] == []
    assert rep["uhlenbeck_equivalent"] is False and rep["s_equivalent"] is False


def test_walls_and_plot_agree(capsys, tmp_path):
    common = ["--surface", "S1", "--class", "1,0,-1", "--region=-3,1,3", "--bounds", "2,4"]
    code, out, _ = run(capsys, "walls", *common)
    assert code == 0
    rep = json.loads(out)
    assert rep["nested"] is True and rep["crossings"] == []
    svg = tmp_path / "walls.svg"
    code, out, _ = run(capsys, "plot-walls", *common, "--out", str(svg))
    assert code == 0
    text = svg.read_text()
    assert text.count('<path class="wall') == len(rep["walls"])
    sidecar = json.loads(svg.with_suffix(".json").read_text())
    assert sidecar == rep["walls"]


def test_walls_csv(capsys):
    code, out, _ = run(capsys, "walls", "--surface", "S1", "--class", "1,0,-1", "--region=-3,1,3",
                       "--bounds", "1,2", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("kind,beta,center,radius_sq")


def test_surface_file_round_trip(capsys, tmp_path):
    p = tmp_path / "s.json"
    p.write_text(tio.dumps(tio.surface_to_dict(S1)))
    code, out, _ = run(capsys, "vertical-wall", "--surface", str(p), "--class", "3,1,0")
    assert code == 0 and out == "1/3\n"


@pytest.mark.parametrize("x", [Fraction(0), Fraction(-7, 3), Fraction(22, 7), Fraction(5)])
def test_rational_round_trip(x):
    assert tio.parse_rat(tio.rat(x)) == x
