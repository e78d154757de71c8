"""Command line behavior: formats, exit codes, determinism."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from dahamac.cli import main, parse_index, parse_ragged
from dahamac.field import Scalar
from dahamac.laurent import poly_from_json
from dahamac.nonsym import E
from dahamac.rep import RepContext, apply_T


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# argument grammar


def test_parse_index():
    assert parse_index("0,1,0|2,1,0", 3, 2) == ((0, 1, 0), (2, 1, 0))
    with pytest.raises(Exception):
        parse_index("0,1", 3, 1)
    with pytest.raises(Exception):
        parse_index("a,b", 2, 1)


def test_parse_ragged():
    assert parse_ragged("1,1|2") == ((1, 1), (2,))
    assert parse_ragged("|1") == ((), (1,))


def test_missing_required_flag_exits_via_argparse():
    with pytest.raises(SystemExit):
        main(["e", "--n", "2"])


# ---------------------------------------------------------------------------
# polynomial commands


def test_e_text(capsys):
    code, out, _ = run(capsys, "e", "--n", "2", "--q-count", "1",
                       "--mu", "0,1")
    assert code == 0
    assert out == ("((-t + 1)/(-t*q1 + 1))*x[1,1] + x[1,2]\n"
                   "weight: (t, 1/q1)\n")


def test_e_json_roundtrip(capsys):
    code, out, _ = run(capsys, "e", "--n", "2", "--r", "2",
                       "--mu", "1,0|0,1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"index", "poly", "weight"}
    assert data["index"] == [[1, 0], [0, 1]]
    ctx = RepContext(2, 2, 2)
    assert poly_from_json(data["poly"]) == E(ctx, ((1, 0), (0, 1))).poly
    assert len(data["weight"]) == 2


def test_e_negative_entries(capsys):
    # a value beginning with "-" is merged into its flag
    code, out, _ = run(capsys, "e", "--n", "2", "--q-count", "1",
                       "--mu", "-1,0")
    assert code == 0
    assert "x[1,1]^-1" in out


def test_e_latex(capsys):
    code, out, _ = run(capsys, "e", "--n", "2", "--q-count", "1",
                       "--mu", "1,1", "--format", "latex")
    assert code == 0
    assert "x_{1,1} x_{1,2}" in out


def test_e_shape_error(capsys):
    code, _, err = run(capsys, "e", "--n", "3", "--q-count", "1",
                       "--mu", "0,1")
    assert code == 2
    assert err.startswith("error:")


def test_p_text(capsys):
    code, out, _ = run(capsys, "p", "--n", "2", "--q-count", "1",
                       "--nu", "1,1")
    assert code == 0
    assert out == "x[1,1]*x[1,2]\neigenvalue: (-t*q1 + t - q1 + 1)/q1\n"


def test_p_rejects_non_orbit_index(capsys):
    code, _, err = run(capsys, "p", "--n", "2", "--q-count", "1",
                       "--nu", "0,1")
    assert code == 2
    assert "orbit" in err


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "poly.txt"
    code, out, _ = run(capsys, "e", "--n", "1", "--q-count", "1",
                       "--mu", "2", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "x[1,1]^2\nweight: (1/q1^2)\n"


# ---------------------------------------------------------------------------
# apply


def test_apply_to_monomial(capsys):
    code, out, _ = run(capsys, "apply", "--n", "2", "--q-count", "1",
                       "--expr", "T1", "--mu", "1,0")
    assert code == 0
    assert out == "(-t + 1)*x[1,1] + x[1,2]\n"


def test_apply_json_pipe(capsys):
    code, out, _ = run(capsys, "e", "--n", "2", "--q-count", "1",
                       "--mu", "0,1", "--format", "json")
    poly_json = json.dumps(json.loads(out)["poly"])
    code, out, _ = run(capsys, "apply", "--n", "2", "--q-count", "1",
                       "--expr", "T1", "--poly", poly_json,
                       "--format", "json")
    assert code == 0
    ctx = RepContext(2, 1, 1)
    image = poly_from_json(json.loads(out)["poly"])
    assert image == apply_T(ctx, 1, E(ctx, ((0, 1),)).poly)


def test_apply_shape_mismatch(capsys):
    code, out, _ = run(capsys, "e", "--n", "2", "--q-count", "1",
                       "--mu", "0,1", "--format", "json")
    poly_json = json.dumps(json.loads(out)["poly"])
    code, _, err = run(capsys, "apply", "--n", "3", "--q-count", "1",
                       "--expr", "T1", "--poly", poly_json)
    assert code == 2 and "shape" in err


def test_apply_unknown_operator(capsys):
    code, _, err = run(capsys, "apply", "--n", "2", "--q-count", "1",
                       "--expr", "Q9", "--mu", "1,0")
    assert code == 2 and err.startswith("error:")


def test_apply_wants_exactly_one_input(capsys):
    code, _, err = run(capsys, "apply", "--n", "2", "--q-count", "1",
                       "--expr", "T1")
    assert code == 2


# ---------------------------------------------------------------------------
# verify


def test_verify_daha_relations(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--q-count", "1",
                       "--suite", "daha-relations", "--max-deg", "2")
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    assert report["suite"] == "daha-relations"
    assert report["max_deg"] == [2]
    names = [row["name"] for row in report["checks"]]
    assert all(name.startswith("daha-relations: ") for name in names)
    assert all(row["ok"] for row in report["checks"])


def test_verify_eigen_reports_distinctness(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--r", "2",
                       "--suite", "eigen", "--max-deg", "1,1")
    assert code == 0
    report = json.loads(out)
    names = [row["name"] for row in report["checks"]]
    assert "eigen: weights pairwise distinct" in names


def test_verify_seed_adds_spotcheck(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--q-count", "1",
                       "--suite", "daha-relations", "--max-deg", "1",
                       "--seed", "7")
    assert code == 0
    report = json.loads(out)
    assert any("seed=7" in row["name"] for row in report["checks"])


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--n", "2", "--q-count", "1",
                       "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_verify_symmetric_collision_exits_nonzero(capsys):
    # three variables, two ranks: one graded component carries two
    # orbit indices with the same symmetric polynomial, so the
    # distinctness clause fails and the run reports it
    code, out, _ = run(capsys, "verify", "--n", "3", "--r", "2",
                       "--suite", "symmetric", "--max-deg", "1,1")
    assert code == 1
    report = json.loads(out)
    assert report["ok"] is False
    bad = [row for row in report["checks"] if not row["ok"]]
    assert bad and all(row["distinct"] is False for row in bad)
    assert all(row["count_matches_dim"] for row in report["checks"])


# ---------------------------------------------------------------------------
# stability


def test_stability_stable_family(capsys):
    code, out, _ = run(capsys, "stability", "--nu", "2,1", "--n-max", "3")
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    assert report["errors"] == []
    assert report["projections"] == {"2": True}
    assert report["matches_remark"] is True
    assert sorted(report["members"]) == ["2", "3"]


def test_stability_transient_family(capsys):
    code, out, _ = run(capsys, "stability", "--nu", "1|1", "--n-max", "2")
    assert code == 1
    report = json.loads(out)
    assert report["ok"] is False
    assert report["projections"] == {"1": False}
    assert any("projection mismatch" in e for e in report["errors"])


def test_stability_bad_index(capsys):
    code, _, err = run(capsys, "stability", "--nu", "0,1", "--n-max", "2")
    assert code == 2 and err.startswith("error:")


def test_stability_range_check(capsys):
    code, _, err = run(capsys, "stability", "--nu", "2,1", "--n-max", "1")
    assert code == 2 and "--n-max" in err


# ---------------------------------------------------------------------------
# determinism and packaging


def test_output_is_deterministic(capsys):
    argv = ("e", "--n", "2", "--r", "2", "--mu", "1,0|0,1",
            "--format", "json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_console_script_runs():
    proc = subprocess.run(
        ["dahamac", "e", "--n", "1", "--q-count", "1", "--mu", "1"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert proc.stdout == "x[1,1]\nweight: (1/q1)\n"


def test_module_entry_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "dahamac.cli", "p", "--n", "2",
         "--q-count", "1", "--nu", "2,0"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1].startswith("eigenvalue:")
