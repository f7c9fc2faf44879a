from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from mincones.cli import run


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_construct_pipe_verify():
    code, cone, _ = call(["construct", "clifford", "--q", "1", "--m", "1"])
    assert code == 0
    assert cone == "cone family=clifford n=4 params=q=1,m=1,kplus=1,kminus=0\nx1^2*x3 - x2^2*x3 + 2*x1*x2*x4\n"
    code, report, _ = call(["verify"], cone)
    assert code == 0
    assert "radial_constant: -8" in report.splitlines()


def test_console_script_pipeline():
    exe = [sys.executable, "-m", "mincones.cli"]
    cone = subprocess.run(exe + ["construct", "clifford", "--q", "1", "--m", "1"], capture_output=True, text=True, check=True)
    report = subprocess.run(exe + ["verify"], input=cone.stdout, capture_output=True, text=True)
    assert report.returncode == 0
    assert "radial_constant: -8" in report.stdout


def test_verify_non_eigenfunction_exits_1():
    code, out, _ = call(["verify"], "x1^3 + x2^2*x3\n")
    assert code == 1
    assert "eigenfunction: false" in out


def test_verify_reads_file(tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("x1*x4 - x2*x3\n")
    code, out, _ = call(["verify", "--input", str(path)])
    assert code == 0 and "weight: -2" in out


def test_verify_json_mode():
    code, out, _ = call(["verify", "--json"], "x1*x4 - x2*x3\n")
    assert json.loads(out)["weight"] == "-2"


def test_timing_is_opt_in():
    _, plain, _ = call(["verify"], "x1*x4 - x2*x3\n")
    _, timed, _ = call(["verify", "--timing"], "x1*x4 - x2*x3\n")
    assert "elapsed_ms" not in plain and "elapsed_ms" in timed


def test_output_is_deterministic():
    runs = [call(["construct", "hsiang"])[1] for _ in range(2)]
    assert runs[0] == runs[1]


def test_table_congruence():
    code, out, _ = call(["table", "congruence", "--max-n", "21"])
    assert code == 0
    counts = [int(line.split("classes=")[1]) for line in out.splitlines()]
    assert counts == [1, 0, 1, 1, 1, 0, 1, 1, 2, 1, 1, 1, 1, 0, 1, 1, 2, 2]


def test_classify_nine():
    code, out, _ = call(["classify", "--n", "9"])
    assert code == 0 and "realizable: false" in out


def test_scan():
    code, out, _ = call(["scan", "--from", "4", "--to", "40"])
    assert code == 0
    assert [l for l in out.splitlines() if l.startswith("non_realizable:")] == [
        "non_realizable: 5", "non_realizable: 9", "non_realizable: 17", "non_realizable: 33"
    ]


def test_invariants_of_system():
    _, system, _ = call(["construct", "clifford", "--q", "4", "--m", "8", "--kplus", "2", "--system"])
    code, out, _ = call(["invariants"], system)
    assert code == 0
    assert "omega_trace_abs: 16" in out and "valid: true" in out


def test_invariants_of_cone():
    _, cone, _ = call(["construct", "det", "--m", "3"])
    code, out, _ = call(["invariants"], cone)
    assert code == 0 and "tau: -1" in out and "degree: 3" in out


@pytest.mark.parametrize("family, args", [
    ("quadric", ["--p", "2", "--q", "3"]),
    ("det", ["--m", "2"]),
    ("cartan", ["--d", "1"]),
    ("hsiang", []),
    ("reducible", []),
    ("clifford", ["--q", "4", "--m", "8", "--kplus", "1", "--kminus", "1"]),
])
def test_constructed_cones_verify(family, args):
    _, cone, _ = call(["construct", family, *args])
    code, out, _ = call(["verify"], cone)
    assert code == 0 and "eigenfunction: true" in out


def test_fkm_construct():
    code, out, _ = call(["construct", "fkm", "--q", "1", "--m", "1"])
    assert code == 0 and out.splitlines()[1] == "-x1^4 - 2*x1^2*x2^2 - x2^4"


@pytest.mark.parametrize("argv, needle", [
    (["construct", "clifford", "--q", "1"], "--m"),
    (["construct", "clifford", "--q", "3", "--m", "2"], "delta"),
    (["construct", "det", "--m", "2", "--d", "1"], "--d"),
    (["construct", "det", "--m", "9"], "m <= 6"),
    (["construct", "clifford", "--q", "1", "--m", "2", "--kplus", "3"], "--kplus"),
    (["construct", "hsiang", "--system"], "--system"),
    (["scan", "--from", "1", "--to", "3"], "scan range"),
])
def test_usage_errors(argv, needle):
    code, _, err = call(argv)
    assert code == 2
    assert needle in err


def test_unknown_flag_rejected(capsys):
    code, _, _ = call(["classify", "--n", "9", "--bogus"])
    assert code == 2
    assert "--bogus" in capsys.readouterr().err


def test_parse_error_exit_2():
    code, _, err = call(["verify"], "x1*x1\n")
    assert code == 2 and "position 3" in err
