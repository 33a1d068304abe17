import json
from pathlib import Path

import pytest

from divweyl.cli import decimal, main

SPECS = Path(__file__).resolve().parents[1] / "specs"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out else None), out.err


def test_fraction_d10(capsys):
    code, rep, _ = run(capsys, "fraction", "--d", "10")
    assert code == 0
    assert rep["results"]["rendering"] == "275/504 ≈ 0.5456349206"
    assert any("0.70" in n for n in rep["notes"])


def test_fraction_large_d_uses_float(capsys):
    code, rep, _ = run(capsys, "fraction", "--d", "1000000")
    assert code == 0 and "fraction" not in rep["results"]
    assert abs(float(rep["results"]["decimal"]) - 0.6931) < 1e-2


def test_census_d7_lonely(capsys):
    code, rep, _ = run(capsys, "census", "--d", "7", "--predicate", "lonely")
    assert code == 0
    by_type = {e["type"]: e["count"] for e in rep["results"]["by_type"]}
    assert by_type["{3,2,2}"] == 210
    assert rep["results"]["count"] == sum(by_type.values())


def test_census_unique_smallest_alias(capsys):
    _, rep, _ = run(capsys, "census", "--d", "5", "--predicate", "unique-smallest")
    assert rep["inputs"]["predicate"] == "unique_smallest"


def test_algebra_weyl_hamilton(capsys):
    code, rep, _ = run(capsys, "algebra", "--spec", str(SPECS / "hamilton.spec"), "weyl")
    assert code == 0
    assert rep["results"]["W_SL1"]["order"] == 2
    assert rep["results"]["summary"].startswith("W_SL1 = {1, phi(sigma^1)")


def test_algebra_info_and_report(capsys):
    _, rep, _ = run(capsys, "algebra", "--spec", str(SPECS / "hamilton.spec"), "info")
    res = rep["results"]
    assert res["invariants"] == {"2": "1/2", "inf": "1/2"}
    assert res["sum_zero"] is True and res["index"] == 2 and res["division"]["verdict"] == "yes"
    _, rep, _ = run(capsys, "algebra", "--spec", str(SPECS / "cubic7.spec"), "report", "--group", "SL1")
    entries = {e["type"]: e for e in rep["results"]["SL1"]["entries"]}
    assert entries["{3}"]["excluded_by"] == ["min_poly_thm", "thm_Q"]
    assert rep["results"]["SL1"]["conflicts"] == []


def test_algebra_search(capsys):
    code, rep, _ = run(capsys, "algebra", "--spec", str(SPECS / "hamilton.spec"), "search", "--height", "2")
    assert code == 0 and rep["results"]["hits"] == 96


def test_hilbert_and_norm(capsys):
    _, rep, _ = run(capsys, "hilbert", "--a", "-1", "--b", "-1")
    assert rep["results"]["symbols"] == {"inf": -1, "2": -1} and rep["results"]["product"] == 1
    _, rep, _ = run(capsys, "hilbert", "--a", "2", "--b", "3", "--place", "3")
    assert rep["results"]["symbols"] == {"3": -1}
    _, rep, _ = run(capsys, "norm", "--field", "quadratic:-1", "--c", "3")
    assert rep["results"]["verdict"] == "no"
    _, rep, _ = run(capsys, "norm", "--field", str(SPECS / "cubic7.spec"), "--c", "7", "--height", "2")
    assert rep["results"]["verdict"] == "yes"


def test_verify_is_reproducible(capsys):
    code1, rep1, _ = run(capsys, "verify", "--suite", "census", "--seed", "5")
    code2, rep2, _ = run(capsys, "verify", "--suite", "census", "--seed", "5")
    assert code1 == code2 == 0 and rep1 == rep2


def test_output_is_byte_identical(capsys):
    main(["census", "--d", "9", "--predicate", "any"])
    first = capsys.readouterr().out
    main(["census", "--d", "9", "--predicate", "any"])
    assert capsys.readouterr().out == first


def test_verify_failure_exit_code(capsys, monkeypatch):
    from divweyl import verify

    monkeypatch.setitem(verify.SUITES, "roots", lambda rng: [verify.Check("forced", False)])
    code, rep, _ = run(capsys, "verify", "--suite", "roots")
    assert code == 2 and rep["failures"] == 1


@pytest.mark.parametrize("argv", [
    ["bogus"], [], ["census", "--d", "x", "--predicate", "big"], ["census", "--d", "4", "--predicate", "odd"],
    ["algebra", "--spec", "missing.spec", "info"], ["hilbert", "--a", "0", "--b", "1"],
    ["hilbert", "--a", "0.5", "--b", "1"], ["norm", "--field", "quartic:2", "--c", "1"],
    ["census", "--d", "0", "--predicate", "big"],
])
def test_usage_errors_exit_1(capsys, argv):
    code, rep, err = run(capsys, *argv)
    assert code == 1 and rep is None and err


def test_decimal_rendering():
    assert decimal(0.69314718055994530942) == "0.6931471806"
