import csv
import io
import json
import subprocess
import sys

import pytest

from distbounds.cli import EXIT_GUARD, EXIT_OK, EXIT_TRIVIAL, EXIT_USAGE, main, parse_range


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_bound_t3_pretty_and_json():
    code, text = run("bound", "t3")
    assert code == EXIT_OK and "1.05826737" in text
    code, text = run("bound", "t3", "--format", "json")
    rec = json.loads(text)
    assert rec["method"] == "T3" and rec["valid"] is True
    assert abs(rec["value"] - 1.05827) < 1e-5


def test_bound_t6_fixed_parameter():
    code, text = run("bound", "t6", "--k", "10", "--b0", "0.20472195", "--format", "json")
    assert code == EXIT_OK
    rec = json.loads(text)
    assert abs(rec["value"] - 1.07816823) < 1e-8
    assert rec["params"]["b0"] == 0.20472195


def test_bound_csv_has_header_and_tag():
    code, text = run("bound", "t9", "--k", "2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == EXIT_OK and len(rows) == 1
    assert rows[0]["method"] == "T9"
    assert float(rows[0]["value"]) == pytest.approx(2 * 0.4**0.4 * 0.6**0.6, rel=1e-15)


def test_bound_t10_at_a_given_composition():
    code, text = run("bound", "t10", "--k", "5", "--m", "1", "--v", "0.97174709,0.02825291", "--format", "json")
    rec = json.loads(text)
    assert code == EXIT_OK and abs(rec["value"] - 1.00297305) < 1e-7
    assert rec["params"]["r"] == 1


@pytest.mark.parametrize("argv, code", [
    (["bound", "t4", "--k", "2"], EXIT_TRIVIAL),
    (["bound", "t4", "--k", "x"], EXIT_USAGE),
    (["bound", "t4", "--k", "8", "--a", "0.1"], EXIT_USAGE),
    (["bound", "t9"], EXIT_USAGE),
    (["bound", "t6", "--k", "10", "--b0", "0.7"], EXIT_TRIVIAL),
    (["bound", "t7", "--k", "5", "--b-neg", "0.3", "--b-pos", "0.1"], EXIT_TRIVIAL),
    (["bound", "t10", "--k", "3", "--m", "1", "--r", "1"], EXIT_TRIVIAL),
    (["bound", "t3", "--bogus"], EXIT_USAGE),
    (["frobnicate"], EXIT_USAGE),
    ([], EXIT_USAGE),
    (["table", "4.2", "--k", "5..x"], EXIT_USAGE),
    (["table", "9.9"], EXIT_USAGE),
    (["verify", "triangles", "--n", "31"], EXIT_GUARD),
    (["verify", "johnson", "--n", "16"], EXIT_GUARD),
    (["verify", "triangles", "--b", "3"], EXIT_USAGE),
    (["verify", "cycles", "--n", "20", "--b", "8", "--a", "7", "--k", "4"], EXIT_USAGE),
    (["bound", "t3", "--workers", "0"], EXIT_USAGE),
])
def test_exit_codes(argv, code, capsys):
    assert run(*argv)[0] == code


def test_parse_range():
    assert parse_range("5..8,30") == [5, 6, 7, 8, 30]
    assert parse_range("7") == [7]
    for bad in ("", "8..5", "a", "1..", "3,,4"):
        with pytest.raises(Exception):
            parse_range(bad)


def test_table_4_2_diff_against_golden():
    code, text = run("table", "4.2", "--k", "5..7", "--diff", "golden", "--format", "json")
    rep = json.loads(text)
    assert code == EXIT_OK and rep["table"] == "4.2"
    assert [(r["params"]["k"], r["method"]) for r in rep["rows"]] == [
        (5, "T7"), (5, "T6"), (6, "T7"), (6, "T6"), (7, "T7"), (7, "T6")]
    assert rep["max_abs_diff"] < 1e-6
    assert len(rep["diff"]) == 9


def test_table_3_3_row():
    code, text = run("table", "3.3", "--k", "6", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == EXIT_OK and rows[0]["k"] == "6"
    assert float(rows[0]["value"]) >= 1.07429 - 1e-5


def test_table_6_6_exact_one():
    code, text = run("table", "6.6", "--m", "1", "--k", "3", "--r-max", "2", "--format", "json")
    rep = json.loads(text)
    assert rep["rows"][0]["value"] == 1.0


def test_table_diff_with_path(tmp_path):
    golden = tmp_path / "g.csv"
    golden.write_text("# hand-made\nk,b_neg,b_pos,t7_value,b0,t6_value,max_value\n"
                      "5,0,0,1.0,0,1.0,1.0\n")
    code, text = run("table", "4.2", "--k", "5", "--diff", str(golden), "--format", "json")
    rep = json.loads(text)
    assert code == EXIT_OK
    assert rep["max_abs_diff"] == pytest.approx(0.00297305, abs=1e-7)


def test_verify_suites_pass():
    for argv in (["verify", "triangles", "--n", "9"],
                 ["verify", "cycles", "--n", "20", "--b", "8", "--a", "3", "--k", "4"],
                 ["verify", "fprank", "--n", "10", "--p", "3", "--sets", "5"]):
        code, text = run(*argv, "--format", "json")
        rep = json.loads(text)
        assert code == EXIT_OK and rep["valid"]
        assert set(rep) == {"method", "params", "value", "valid", "evidence"}
        assert rep["value"] == len(rep["evidence"])


def test_verify_pretty_summary():
    code, text = run("verify", "oddgirth")
    assert code == EXIT_OK and text.rstrip().endswith("checks passed")


@pytest.mark.parametrize("argv", [
    ["bound", "t7", "--k", "12", "--seed", "5", "--format", "json"],
    ["table", "6.6", "--m", "2", "--k", "5,6", "--r-max", "2", "--format", "csv"],
    ["verify", "deletion", "--trials", "500", "--random-sets", "50", "--seed", "4", "--format", "json"],
])
def test_output_is_byte_identical(argv):
    assert run(*argv) == run(*argv)


def test_table_rows_independent_of_workers():
    a = run("table", "4.2", "--k", "5..8", "--workers", "1", "--format", "csv")
    b = run("table", "4.2", "--k", "5..8", "--workers", "2", "--format", "csv")
    assert a == b


def test_workers_env_default(monkeypatch):
    monkeypatch.setenv("DISTBOUNDS_WORKERS", "2")
    assert run("table", "4.2", "--k", "5,6", "--format", "csv")[0] == EXIT_OK


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "distbounds", "bound", "t3", "--format", "json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["method"] == "T3"


def test_help_lists_exit_codes():
    proc = subprocess.run([sys.executable, "-m", "distbounds", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "exit codes" in proc.stdout
