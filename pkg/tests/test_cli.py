import json
import subprocess
import sys

import pytest

from rightloops.cli import main
from rightloops.constructions import projection_loop
from rightloops.fileformats import format_group, format_loop
from rightloops.permgroup import symmetric_group


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


@pytest.fixture
def bad_loop(tmp_path):
    path = tmp_path / "bad.loop"
    path.write_text("elements: 1 2 3\nidentity: 1\ntable:\n1 2 3\n2 3 1\n3 1 1\n")
    return str(path)


@pytest.fixture
def proj5(tmp_path):
    path = tmp_path / "p5.loop"
    path.write_text(format_loop(projection_loop(5)))
    return str(path)


@pytest.fixture
def proj4_group(tmp_path, capsys):
    src = tmp_path / "p4.loop"
    src.write_text(format_loop(projection_loop(4)))
    code, data = run_json(capsys, "extend", str(src))
    assert code == 0
    path = tmp_path / "g24.grp"
    path.write_text(data["group_file"])
    labels = data["group_file"].splitlines()[1].split()[1:]
    return str(path), [x for x in labels if x.endswith("*e")], data["embedded_s"]


def test_analyze_example(capsys, ex53_path):
    code, out, _ = run(capsys, "analyze", ex53_path)
    assert code == 0
    assert "G_S order 12" in out
    assert "TAut order 24" in out
    assert "Aut = {I,(2 3),(4 5),(2 3)(4 5)}" in out
    assert "G_S type: A4" in out
    assert "twisted right gyrogroup: yes" in out


def test_analyze_json_twin(capsys, ex53_path):
    code, data = run_json(capsys, "analyze", ex53_path)
    assert code == 0
    assert data["gs"]["order"] == 12 and data["taut"]["order"] == 24
    assert data["f"]["2,4"] == "(2 3 4)"
    assert data["eta"].startswith("((234), (243))")
    assert data["identities"]["holds"]


def test_output_is_byte_deterministic(capsys, ex53_path):
    assert run(capsys, "analyze", ex53_path) == run(capsys, "analyze", ex53_path)
    assert run(capsys, "--json", "analyze", ex53_path) == run(capsys, "--json", "analyze", ex53_path)


def test_validate(capsys, ex53_path, bad_loop):
    assert run(capsys, "validate", ex53_path)[0] == 0
    code, out, err = run(capsys, "validate", bad_loop)
    assert code == 2
    assert err.strip() == "error: column 3 not bijective"
    code, data = run_json(capsys, "validate", bad_loop)
    assert code == 2 and data == {"error": "input", "reason": "column 3 not bijective"}


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", str(tmp_path / "nope.loop"))
    assert code == 2 and err.startswith("error: cannot read")


def test_inner_and_sigma(capsys, ex53_path):
    assert run(capsys, "inner", ex53_path, "4", "5")[1].strip() == "f(4,5) = (2 3)(4 5)"
    assert run(capsys, "sigma", ex53_path, "4", "(2 3 4)")[1].strip() == "sigma_4((2 3 4)) = (2 4 3)"
    assert run_json(capsys, "sigma", ex53_path, "4", "(234)")[1]["sigma"] == "(2 4 3)"
    assert run(capsys, "sigma", ex53_path, "4", "(1 2)")[0] == 2
    assert run(capsys, "inner", ex53_path, "9", "2")[0] == 2


def test_eta(capsys, ex53_path, bad_loop, tmp_path):
    code, out, _ = run(capsys, "eta", ex53_path)
    assert code == 0
    assert out.strip() == "eta = ((234), (243))((235), (253))((245), (345))((254), (354))((24)(35), (25)(34))"
    # a right loop whose inverses are not two-sided is not a twisted right gyrogroup
    path = tmp_path / "nt.loop"
    path.write_text("elements: 0 1 2\ntable:\n0 1 2\n1 0 0\n2 2 1\n")
    assert run(capsys, "eta", str(path))[0] == 1


def test_extend_round_trips_as_group_file(capsys, ex53_path, tmp_path):
    code, data = run_json(capsys, "extend", ex53_path)
    assert code == 0 and data["order"] == 60
    path = tmp_path / "g.grp"
    path.write_text(data["group_file"])
    H = [x for x in data["group_file"].splitlines()[1].split()[1:] if x.endswith("*1")]
    code, out, _ = run(capsys, "transversal", str(path), "--subgroup", *H, "--transversal", *data["embedded_s"])
    assert code == 0
    assert "classification: twisted-only" in out
    assert "induced twisted right gyrogroup: yes" in out


def test_twisted_subgroup(capsys, tmp_path):
    path = tmp_path / "s3.grp"
    path.write_text(format_group(symmetric_group(3)))
    assert run(capsys, "twisted-subgroup", str(path), "--subset", "I,(0,1),(0,2),(1,2)")[0] == 0
    code, out, _ = run(capsys, "twisted-subgroup", str(path), "--subset", "I", "(0,1,2)")
    assert code == 1 and out.startswith("twisted subgroup: no")
    assert run(capsys, "twisted-subgroup", str(path), "--subset", "I", "zz")[0] == 2


def test_equivalence(capsys, ex53_path):
    code, out, _ = run(capsys, "equivalence", ex53_path)
    assert code == 0
    assert "equivalence: holds" in out and "G_S S order 60" in out


def test_project_and_deform(capsys, proj5):
    code, out, _ = run(capsys, "project", "5")
    assert code == 0 and out.startswith("elements: e x1 x2 x3 x4")
    code, data = run_json(capsys, "deform", proj5, "--rho", "(x1 x2)")
    assert code == 0
    assert data["taut"]["order"] == 24
    assert data["aut"]["order"] == 4
    assert run(capsys, "deform", proj5, "--rho", "(x1 x2 x3)")[0] == 2


def test_sh(capsys, proj4_group):
    path, H, S = proj4_group
    code, out, _ = run(capsys, "sh", path, "--subgroup", *H, "--transversal", *S, "--h", "(x1,x2)*e")
    assert code == 0
    assert "classification: twisted-only" in out
    code, _, err = run(capsys, "sh", path, "--subgroup", *H, "--transversal", *S, "--h", "I*e")
    assert code == 2 and "involution" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "3", "--census")
    assert code == 0 and "total right loops: 4" in out
    code, data = run_json(capsys, "enumerate", "3", "--census")
    assert data["total"] == 4
    code, data = run_json(capsys, "enumerate", "4", "--filter", "trg")
    assert data["count"] == 14
    code, data = run_json(capsys, "enumerate", "4", "--up-to-iso")
    assert sum(1 for _ in data["tables"]) == data["count"]
    code, out, _ = run(capsys, "enumerate", "4", "--census", "--up-to-iso")
    assert "isomorphism classes" in out


def test_enumerate_cap_and_bad_filter(capsys):
    code, _, err = run(capsys, "enumerate", "8")
    assert code == 3 and "cap" in err
    assert run_json(capsys, "enumerate", "8")[1]["error"] == "cap"
    assert run(capsys, "enumerate", "3", "--filter", "nonsense")[0] == 2


def test_module_entry_point(ex53_path):
    res = subprocess.run([sys.executable, "-m", "rightloops", "enumerate", "3", "--census"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert "total right loops: 4" in res.stdout


def test_cap_override_is_scoped(capsys):
    from rightloops.config import LIMITS
    before = LIMITS.enumerate
    assert run(capsys, "--cap", "2", "enumerate", "3")[0] == 3
    assert LIMITS.enumerate == before
