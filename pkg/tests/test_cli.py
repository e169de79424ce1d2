"""Command line entry points, output formats and exit codes."""

import json
import subprocess
import sys

import pytest

from dtcodes import GF, double_toeplitz_code, parse_triple, weight_enumerator
from dtcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_code_minwt_negacirculant(capsys):
    code, out, err = run(capsys, "code", "--q", "3", "--nc", "(1,2,1,1,1,0)", "--minwt")
    assert code == 0
    assert json.loads(out) == 6
    assert "[12,6] code over F3" in err


def test_code_minwt_trivial_circulant(capsys):
    code, out, _ = run(capsys, "code", "--q", "2", "--dc", "(0)", "--minwt")
    assert code == 0
    assert json.loads(out) == 1


def test_code_minwt_quaternary(capsys):
    code, out, _ = run(capsys, "code", "--q", "4", "--dc", "(1,w)", "--minwt")
    assert code == 0
    assert json.loads(out) == 3


def test_code_wenum_matches_library(capsys):
    gf = GF(2)
    literal = "0;(1,1);(1,0)"
    code, out, _ = run(capsys, "code", "--q", "2", "--dt", literal, "--wenum")
    assert code == 0
    W = weight_enumerator(double_toeplitz_code(parse_triple(gf, literal)))
    assert json.loads(out) == list(W.coeffs)


def test_code_dual_is_orthogonal(capsys):
    code, out, _ = run(capsys, "code", "--q", "3", "--dc", "(1,2)", "--dual")
    assert code == 0
    blob = json.loads(out)
    assert blob["n"] == 4 and blob["k"] == 2
    assert len(blob["rows"]) == 2


def test_code_fsd(capsys):
    code, out, _ = run(capsys, "code", "--q", "2", "--dt", "1;(0,1);(1,1)", "--fsd")
    assert code == 0
    assert json.loads(out) is True


def test_code_usage_errors(capsys):
    # argparse rejects a missing family / action with exit code 2
    with pytest.raises(SystemExit) as exc:
        main(["code", "--q", "2", "--minwt"])
    assert exc.value.code == 2
    capsys.readouterr()
    # a malformed literal is our own usage failure, same exit code
    code, _, err = run(capsys, "code", "--q", "2", "--dt", "garbage", "--minwt")
    assert code == 2
    assert "error" in err


def test_awe_coefficients(capsys):
    code, out, _ = run(capsys, "awe", "--q", "2", "--n", "2")
    assert code == 0
    assert json.loads(out) == [2, 1, 1]


def test_awe_verify(capsys):
    code, _, err = run(capsys, "awe", "--q", "3", "--n", "6", "--verify")
    assert code == 0
    assert "matches enumeration" in err


def test_awe_threshold(capsys):
    code, out, _ = run(capsys, "awe", "--q", "2", "--threshold", "--d", "6")
    assert code == 0
    assert json.loads(out) == 40
    code, _, err = run(capsys, "awe", "--q", "2", "--threshold")
    assert code == 2


def test_awe_table_csv(capsys):
    code, out, _ = run(capsys, "awe", "--q", "3", "--table", "--dmin", "5", "--dmax", "7")
    assert code == 0
    assert out.splitlines() == ["d,n", "5,20", "6,26", "7,32"]


def test_awe_odd_length_rejected(capsys):
    code, _, err = run(capsys, "awe", "--q", "2", "--n", "7")
    assert code == 2
    assert "even" in err


def test_search_find_optimal(capsys):
    code, out, err = run(capsys, "search", "--q", "2", "--n", "4", "--mode", "find-optimal")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert all(rec["min_weight"] == 2 for rec in lines)
    assert "optimum d=2" in err
    # C2 keeps the filtered optimal triples only
    keys = {(rec["t"], rec["a"], rec["b"]) for rec in lines}
    assert ("1", "(0)", "(1)") not in keys
    assert ("1", "(1)", "(0)") in keys


def test_search_family_rows(capsys):
    code, out, _ = run(capsys, "search", "--q", "3", "--n", "4", "--family", "nc")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert all(rec["mu"] == -1 and rec["min_weight"] == 3 for rec in recs)


def test_search_collect_at(capsys):
    code, out, _ = run(
        capsys, "search", "--q", "2", "--n", "6", "--reduction", "none",
        "--mode", "collect-at", "--d", "3",
    )
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs and all(rec["min_weight"] == 3 for rec in recs)


def test_search_budget_exit(capsys):
    code, _, err = run(capsys, "search", "--q", "2", "--n", "12", "--budget", "100")
    assert code == 3
    assert "budget exceeded" in err


def test_search_workers_env(capsys, monkeypatch):
    monkeypatch.setenv("DTCODES_WORKERS", "2")
    code, out, _ = run(capsys, "search", "--q", "2", "--n", "6", "--partitions", "2")
    assert code == 0
    monkeypatch.setenv("DTCODES_WORKERS", "zero")
    code, _, err = run(capsys, "search", "--q", "2", "--n", "6")
    assert code == 2
    assert "DTCODES_WORKERS" in err


def test_classify_json(capsys):
    code, out, err = run(capsys, "classify", "--q", "2", "--n", "12")
    assert code == 0
    blob = json.loads(out)
    assert blob["d"] == 4
    assert blob["counts"] == {"dt_only": 4, "dc": 4, "nc": 0}
    assert len(blob["classes"]) == 8
    assert "4 + 4 + 0 classes" in err


def test_verify_tables_awe_suite(capsys):
    code, out, err = run(capsys, "verify-tables", "--suite", "awe-oracle")
    assert code == 0
    blob = json.loads(out)
    assert blob == {"suite": "awe-oracle", "checks": 8, "failures": 0}
    assert err.count("[pass]") == 8


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dtcodes.cli", "awe", "--q", "4", "--n", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == [64, 24, 180, 432, 324]
