import json
import subprocess
import sys

import pytest

from pqpoly.cli import main
from pqpoly.exact import XPoly
from pqpoly.families import poly_bernoulli, poly_cauchy_1
from pqpoly.pqcalc import PQParams


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# gen


def test_gen_poly_euler_classical_point(capsys):
    code, out, _ = run_cli(
        capsys,
        "gen",
        "--family",
        "poly-euler",
        "--k",
        "1",
        "--p",
        "1/1",
        "--q",
        "1/1",
        "--nmax",
        "2",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["family"] == "poly-euler"
    assert obj["k"] == 1
    assert obj["p"] == "1/1" and obj["q"] == "1/1"
    assert obj["rows"] == [
        {"n": 0, "coeffs": []},
        {"n": 1, "coeffs": ["1/1"]},
        {"n": 2, "coeffs": ["-1/1", "2/1"]},
    ]


def test_gen_stirling2_triangle(capsys):
    code, out, _ = run_cli(capsys, "gen", "--family", "stirling2", "--nmax", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj["rows"][4] == {
        "n": 4,
        "values": ["0/1", "1/1", "7/1", "6/1", "1/1"],
    }


def test_gen_poly_cauchy_default_parameters(capsys):
    code, out, _ = run_cli(
        capsys,
        "gen",
        "--family",
        "poly-cauchy-1",
        "--k",
        "2",
        "--nmax",
        "1",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["p"] == "1/2" and obj["q"] == "1/3"
    assert obj["rows"][1]["coeffs"] == ["36/25", "-1/1"]


def test_gen_round_trips_exactly(capsys):
    code, out, _ = run_cli(
        capsys,
        "gen",
        "--family",
        "poly-bernoulli",
        "--k",
        "-2",
        "--p",
        "3/4",
        "--q",
        "1/5",
        "--nmax",
        "6",
    )
    assert code == 0
    obj = json.loads(out)
    params = PQParams.parse(obj["p"], obj["q"])
    for row in obj["rows"]:
        rebuilt = XPoly.from_strings(row["coeffs"])
        assert rebuilt == poly_bernoulli(row["n"], obj["k"], params)


def test_gen_csv_shape(capsys):
    code, out, _ = run_cli(
        capsys,
        "gen",
        "--family",
        "poly-cauchy-1",
        "--k",
        "2",
        "--nmax",
        "1",
        "--format",
        "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,coeffs"
    assert lines[1] == "0,1/1"
    assert lines[2] == "1,36/25;-1/1"


def test_gen_csv_triangle(capsys):
    code, out, _ = run_cli(
        capsys,
        "gen",
        "--family",
        "stirling1",
        "--nmax",
        "3",
        "--format",
        "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,values"
    assert lines[4] == "3,0/1;2/1;3/1;1/1"


def test_gen_classical_families(capsys):
    code, out, _ = run_cli(
        capsys, "gen", "--family", "euler", "--nmax", "2"
    )
    assert code == 0
    obj = json.loads(out)
    assert "p" not in obj
    assert obj["rows"][2]["coeffs"] == ["0/1", "-1/1", "1/1"]

    code, out, _ = run_cli(
        capsys, "gen", "--family", "bernoulli-order", "--s", "2", "--nmax", "1"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["s"] == 2
    assert obj["rows"][1]["coeffs"] == ["-1/1", "1/1"]

    code, out, _ = run_cli(
        capsys,
        "gen",
        "--family",
        "frobenius-euler",
        "--u",
        "2",
        "--nmax",
        "1",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["u"] == "2/1"
    assert obj["rows"][1]["coeffs"] == ["1/1", "1/1"]


def test_gen_writes_output_file(capsys, tmp_path):
    target = tmp_path / "rows.json"
    code, out, _ = run_cli(
        capsys,
        "gen",
        "--family",
        "euler",
        "--nmax",
        "1",
        "--output",
        str(target),
    )
    assert code == 0
    assert out == ""
    obj = json.loads(target.read_text())
    assert obj["rows"][1]["coeffs"] == ["-1/2", "1/1"]


def test_gen_rejects_decimal_parameter(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["gen", "--family", "poly-euler", "--nmax", "2", "--p", "0.5"])
    assert excinfo.value.code == 2


def test_gen_rejects_invalid_parameter_box(capsys):
    code, _, err = run_cli(
        capsys,
        "gen",
        "--family",
        "poly-euler",
        "--nmax",
        "2",
        "--p",
        "1/3",
        "--q",
        "1/2",
    )
    assert code == 2
    assert err.startswith("error: --p/--q:")


def test_gen_rejects_frobenius_u_one(capsys):
    code, _, err = run_cli(
        capsys,
        "gen",
        "--family",
        "frobenius-euler",
        "--u",
        "1/1",
        "--nmax",
        "2",
    )
    assert code == 2
    assert "--u" in err


# ---------------------------------------------------------------------------
# verify


def test_verify_single_check(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--only", "tid1", "--nmax", "4"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["n_max"] == 4
    assert obj["passed"] is True
    assert len(obj["reports"]) == 1
    report = obj["reports"][0]
    assert report["id"] == "tid1"
    assert report["cells_total"] == report["cells_passed"] > 0
    assert "first_failure" not in report


def test_verify_several_checks_in_registry_order(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify",
        "--only",
        "invrel1,appell_i",
        "--nmax",
        "3",
    )
    assert code == 0
    obj = json.loads(out)
    assert [r["id"] for r in obj["reports"]] == ["appell_i", "invrel1"]


def test_verify_zero_nmax_is_a_failure(capsys):
    code, out, _ = run_cli(capsys, "verify", "--nmax", "0")
    assert code == 1
    obj = json.loads(out)
    assert obj["passed"] is False
    by_id = {r["id"]: r for r in obj["reports"]}
    assert by_id["eucls"]["cells_total"] == 0


def test_verify_unknown_check_id(capsys):
    code, _, err = run_cli(capsys, "verify", "--only", "bogus", "--nmax", "2")
    assert code == 2
    assert "unknown check ids" in err


def test_verify_thread_env_matches_serial(capsys, monkeypatch):
    code, serial, _ = run_cli(
        capsys, "verify", "--only", "appell_ii,invrel2", "--nmax", "3"
    )
    assert code == 0
    monkeypatch.setenv("PQPOLY_THREADS", "2")
    code, pooled, _ = run_cli(
        capsys, "verify", "--only", "appell_ii,invrel2", "--nmax", "3"
    )
    assert code == 0
    assert serial == pooled


@pytest.mark.parametrize("raw", ["abc", "0", "-3"])
def test_verify_rejects_bad_thread_env(capsys, monkeypatch, raw):
    monkeypatch.setenv("PQPOLY_THREADS", raw)
    code, _, err = run_cli(capsys, "verify", "--only", "appell_i", "--nmax", "1")
    assert code == 2
    assert "PQPOLY_THREADS" in err


def test_verify_writes_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys,
        "verify",
        "--only",
        "orthogonality",
        "--nmax",
        "5",
        "--output",
        str(target),
    )
    assert code == 0
    assert out == ""
    obj = json.loads(target.read_text())
    assert obj["reports"][0]["id"] == "orthogonality"


# ---------------------------------------------------------------------------
# closed-form


def test_closed_form_weight_zero(capsys):
    code, out, _ = run_cli(
        capsys, "closed-form", "--k", "0", "--p", "1/2", "--q", "1/3"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["numerator"] == ["0/1", "1/1"]
    assert obj["denominator"] == ["1/1", "-1/1"]


def test_closed_form_weight_minus_one_default_point(capsys):
    code, out, _ = run_cli(capsys, "closed-form", "--k", "-1")
    assert code == 0
    obj = json.loads(out)
    assert obj["p"] == "1/2" and obj["q"] == "1/3"
    assert obj["numerator"] == ["0/1", "1/1"]
    assert obj["denominator"] == ["1/1", "-5/6", "1/6"]


def test_closed_form_csv(capsys):
    code, out, _ = run_cli(
        capsys, "closed-form", "--k", "0", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "numerator,0/1;1/1"
    assert lines[1] == "denominator,1/1;-1/1"


def test_closed_form_rejects_positive_weight(capsys):
    code, _, err = run_cli(capsys, "closed-form", "--k", "1")
    assert code == 2
    assert err.startswith("error: --k:")


def test_closed_form_rejects_equal_parameters(capsys):
    code, _, err = run_cli(
        capsys, "closed-form", "--k", "0", "--p", "2/3", "--q", "2/3"
    )
    assert code == 2
    assert "--p/--q" in err


# ---------------------------------------------------------------------------
# module entry point


def test_module_invocation_round_trip(tmp_path):
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "pqpoly",
            "gen",
            "--family",
            "poly-cauchy-1",
            "--k",
            "3",
            "--nmax",
            "4",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    obj = json.loads(proc.stdout)
    params = PQParams.parse(obj["p"], obj["q"])
    for row in obj["rows"]:
        assert XPoly.from_strings(row["coeffs"]) == poly_cauchy_1(
            row["n"], 3, params
        )
