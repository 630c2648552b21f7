"""End-to-end command behavior: JSON reports, CSV curves, exit codes."""

import json
import subprocess
import sys

import pytest

from pvalent.cli import main

CANON = ["--alpha", "0", "--A", "1", "--B", "-1"]


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_reports_membership(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text('{"p": 1, "coeffs": [[2, 0.25]]}')
    code, out, err = run(capsys, ["check", str(path), "--class", "r", *CANON])
    assert code == 0 and err == ""
    rep = json.loads(out)
    assert rep["member"] is True
    assert rep["margin"] == 0.0


def test_extremal_check_round_trip(tmp_path, capsys):
    for family in ("r", "p"):
        code, out, _ = run(
            capsys,
            ["extremal", "--k", "3", "--class", family, "--alpha", "0.2",
             "--A", "0.9", "--B", "-0.7", "--mu", "0.1", "--delta", "0.8"],
        )
        assert code == 0
        path = tmp_path / f"ext_{family}.json"
        path.write_text(out)
        code, out, _ = run(
            capsys,
            ["check", str(path), "--class", family, "--alpha", "0.2",
             "--A", "0.9", "--B", "-0.7", "--mu", "0.1", "--delta", "0.8"],
        )
        assert code == 0
        assert abs(json.loads(out)["margin"]) <= 1e-10


def test_check_reads_stdin(tmp_path, capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO('{"p": 1, "coeffs": [[2, 0.1]]}'))
    code, out, _ = run(capsys, ["check", "-", "--class", "r", *CANON])
    assert code == 0
    assert json.loads(out)["sum"] == pytest.approx(0.4, rel=1e-15)


def test_radius_json(capsys):
    code, out, _ = run(capsys, ["radius", "--kind", "starlike", "--zeta", "0", *CANON])
    assert code == 0
    rep = json.loads(out)
    assert rep["argmin_k"] == 2
    assert rep["radius"] == pytest.approx(2.0, abs=1e-12)


def test_distortion_csv_header(capsys):
    code, out, _ = run(
        capsys,
        ["distortion", "--m", "1", "--rmin", "0.1", "--rmax", "0.5", "--steps", "3", *CANON],
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "r,lower,upper"
    assert len(lines) == 4
    r, lo, up = (float(x) for x in lines[-1].split(","))
    assert (r, lo, up) == (0.5, 0.75, 1.25)


def test_fracbound_csv_with_printed_columns(capsys):
    code, out, _ = run(
        capsys,
        ["fracbound", "--theorem", "7", "--c", "1", "--eta", "1",
         "--rmin", "0.5", "--rmax", "0.5", "--steps", "1", "--as-printed", *CANON],
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "r,lower,upper,printed_lower,printed_upper"
    row = [float(x) for x in lines[1].split(",")]
    assert row[1] == 17.0 / 144.0
    assert row[3] == pytest.approx(row[2], rel=1e-15)  # the T7 sign slip


def test_fracbound_csv_without_printed(capsys):
    code, out, _ = run(
        capsys,
        ["fracbound", "--theorem", "7", "--c", "1", "--eta", "1",
         "--rmin", "0.25", "--rmax", "0.75", "--steps", "3", *CANON],
    )
    assert code == 0
    assert out.strip().splitlines()[0] == "r,lower,upper"


def test_hadamard_extremal_mode(capsys):
    code, out, _ = run(capsys, ["hadamard", "--extremal", "--beta", "0.5", *CANON])
    assert code == 0
    rep = json.loads(out)
    assert rep["order"] == pytest.approx(10.0 / 11.0, abs=1e-12)
    assert rep["product"]["member"] is True


def test_hadamard_two_files(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text('{"p": 1, "coeffs": [[2, 0.25]]}')
    b.write_text('{"p": 1, "coeffs": [[2, 0.1]]}')
    code, out, _ = run(capsys, ["hadamard", str(a), str(b), *CANON])
    assert code == 0
    rep = json.loads(out)
    assert rep["order"] == pytest.approx(6.0 / 7.0, abs=1e-12)
    assert rep["product"]["member"] is True


def test_hadamard_wrong_file_count_exits_two(tmp_path):
    a = tmp_path / "a.json"
    a.write_text('{"p": 1, "coeffs": [[2, 0.25]]}')
    with pytest.raises(SystemExit) as exc:
        main(["hadamard", str(a), *CANON])
    assert exc.value.code == 2


def test_oracle_subordination_json(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text('{"p": 1, "coeffs": [[2, 0.25]]}')
    code, out, _ = run(capsys, ["oracle", str(path), "--check", "subordination", *CANON])
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"] is True
    assert set(rep) == {"check", "extremum", "threshold", "arg_z", "pass", "tolerance", "warnings"}


def test_oracle_failure_still_exits_zero(tmp_path, capsys):
    # the verdict lives in the JSON, not the exit status
    path = tmp_path / "f.json"
    path.write_text('{"p": 1, "coeffs": [[2, 0.3]]}')
    code, out, _ = run(capsys, ["oracle", str(path), "--check", "subordination", *CANON])
    assert code == 0
    assert json.loads(out)["pass"] is False


def test_domain_error_exits_one(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text('{"p": 1, "coeffs": [[2, -0.5]]}')
    code, out, err = run(capsys, ["check", str(path), "--class", "r", *CANON])
    assert code == 1
    msg = json.loads(err)
    assert msg["error"] == "NegativeCoefficientError"


def test_alpha_out_of_range_exits_one(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text('{"p": 1, "coeffs": [[2, 0.1]]}')
    code, _, err = run(capsys, ["check", str(path), "--class", "r",
                                "--alpha", "2", "--A", "1", "--B", "-1"])
    assert code == 1
    assert json.loads(err)["error"] == "ParameterOutOfRangeError"


def test_io_errors_exit_two(tmp_path, capsys):
    code, _, err = run(capsys, ["check", str(tmp_path / "missing.json"),
                                "--class", "r", *CANON])
    assert code == 2
    assert json.loads(err)["error"] == "FileNotFoundError"
    bad = tmp_path / "bad.json"
    bad.write_text('{"p": 1')
    code, _, err = run(capsys, ["check", str(bad), "--class", "r", *CANON])
    assert code == 2
    assert json.loads(err)["error"] == "JSONDecodeError"


def test_bad_flag_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["radius", "--kind", "wobbly", *CANON])
    assert exc.value.code == 2


def test_selftest_runs_clean(capsys, monkeypatch):
    monkeypatch.setenv("PVALENT_SEED", "11")
    code, out, _ = run(capsys, ["selftest"])
    assert code == 0
    assert "9/9 checks passed (seed 11)" in out
    assert "printed-vs-derived audit" in out


def test_selftest_seed_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("PVALENT_SEED", "11")
    code, out, _ = run(capsys, ["selftest", "--seed", "4"])
    assert code == 0
    assert "(seed 4)" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pvalent.cli", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "selftest" in proc.stdout
