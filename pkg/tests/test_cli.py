import subprocess
import sys

import pytest

from dudleyvc.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_demo_disks(capsys):
    code, out, _ = run(["demo", "disks"], capsys)
    assert code == 0
    assert "cell_count: 176\n" in out and "vc_dimension: 3\n" in out and "verdict: Certified\n" in out


def test_demo_exit_codes(capsys):
    assert run(["demo", "concyclic"], capsys)[0] == 1
    assert run(["demo", "trig"], capsys)[0] == 2


def test_usage_error_is_exit_3(capsys):
    with pytest.raises(SystemExit) as info:
        main(["demo", "nope"])
    assert info.value.code == 3
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 3


def test_verify_sampled(capsys):
    code, out, _ = run(["verify", "--family", "disks", "--param", "k=2", "--n", "9", "--seed", "3"], capsys)
    assert code == 0 and "N: 9\n" in out and "cell_count: 130\n" in out


def test_verify_errors(capsys):
    code, _, err = run(["verify", "--family", "disks", "--n", "3"], capsys)
    assert code == 3 and "N > n" in err
    code, _, err = run(["verify", "--n", "5"], capsys)
    assert code == 3 and "--family" in err
    code, _, err = run(["verify", "--family", "disks", "--param", "k"], capsys)
    assert code == 3
    code, _, err = run(["verify", "--family", "spheres", "--n", "5"], capsys)
    assert code == 3


def test_verify_files_and_json(tmp_path, capsys):
    basis = tmp_path / "b.txt"
    basis.write_text("dim: 2\nf0: -x^2 - y^2\nf: 1\nf: x\nf: y\n")
    points = tmp_path / "p.txt"
    points.write_text("k=2\n1,0\n0,1\n-1,0\n0,-1\n1/3,1/7\n")
    report = tmp_path / "r.json"
    code, out, _ = run(["verify", "--basis-file", str(basis), "--points", str(points), "--json", str(report)], capsys)
    assert code == 1
    assert "condition2_witness: (0,1,2,3)" in out
    assert '"verdict": "Certified"' in report.read_text()


def test_points_dimension_mismatch(tmp_path, capsys):
    points = tmp_path / "p.txt"
    points.write_text("k=1\n0\n1\n2\n3\n4\n")
    code, _, err = run(["verify", "--family", "disks", "--points", str(points)], capsys)
    assert code == 3 and "k=1" in err


def test_sample_enumerate_vcdim_pipeline(tmp_path, capsys):
    pts = tmp_path / "p.txt"
    ss = tmp_path / "s.txt"
    assert run(["sample", "--k", "2", "--n", "7", "--seed", "1", "--out", str(pts)], capsys)[0] == 0
    assert pts.read_text().startswith("k=2\n")
    assert run(["enumerate", "--family", "disks", "--points", str(pts), "--oracle", "--out", str(ss)], capsys)[0] == 0
    assert ss.read_text().startswith("N=7 count=64\n")
    code, out, _ = run(["vcdim", "--set-system", str(ss), "--dim", "3", "--exhaustive"], capsys)
    assert code == 0
    assert out == (
        "N: 7\ncount: 64\nvc_dimension: 3\ndimension: 3\nsauer_bound: 64\n"
        "maximum: true\nmaximum_criterion: all subsets\n"
    )


def test_vcdim_without_dim(tmp_path, capsys):
    ss = tmp_path / "s.txt"
    ss.write_text("N=2 count=3\n00\n01\n11\n")
    code, out, _ = run(["vcdim", "--set-system", str(ss)], capsys)
    assert code == 0 and out == "N: 2\ncount: 3\nvc_dimension: 1\n"


def test_vcdim_from_basis(capsys):
    code, out, _ = run(["vcdim", "--family", "halfspaces", "--n", "6", "--seed", "0"], capsys)
    assert code == 1 and "maximum: false" in out


def test_trial(capsys):
    code, out, _ = run(["trial", "--family", "disks", "--n", "6", "--seed", "4", "--trials", "3"], capsys)
    assert code == 0 and "maximum: 3/3\n" in out and "failing_seeds: none\n" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["demo", "disks"],
        ["verify", "--family", "disks", "--n", "8", "--seed", "11", "--exhaustive"],
        ["verify", "--family", "trig", "--n", "6", "--seed", "2", "--dist", "gaussian"],
        ["sample", "--k", "3", "--n", "4", "--seed", "9"],
    ],
)
def test_byte_identical_reruns(argv):
    cmd = [sys.executable, "-m", "dudleyvc", *argv]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode in (0, 1, 2)
    assert a.stdout == b.stdout and a.stdout
