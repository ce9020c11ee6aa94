import csv
import io
import json
import shutil
import subprocess

import pytest

from markov3.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def js(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def test_spectrum_json():
    rows = js("spectrum", "--below", "3", "--max-m", "5")
    assert [r["m"] for r in rows] == [1, 2, 5]
    assert rows[2]["lagrange_point"] == "(0 + 1*sqrt(221))/5"
    assert rows[2]["tilde_point"] == "(15 + 1*sqrt(221))/10"


def test_spectrum_csv_and_decimal():
    code, out, _ = call("--csv", "--decimal", "6", "spectrum", "--max-m", "5")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 3 and rows[0]["lagrange_point_decimal_approx"].startswith("2.23606")
    assert "\r" not in out


def test_triples_and_forms():
    assert len(js("triples", "--bound", "34")) == 6
    f = js("forms", "--m", "5")[0]
    assert (f["k"], f["A"], f["B"], f["C"]) == (2, 5, 11, -5)
    r = js("roots", "--m", "5", "--cf")
    assert r["theta_cf"] == "[0; 2, (1, 1, 2, 2)]"
    assert "warning" in js("roots", "--m", "1")


def test_words_commands():
    assert js("words", "christoffel", "1", "2")["letters"] == "aab"
    assert js("words", "mechanical", "--slope", "1/2", "--n", "4")["letters"] == "abab"
    r = js("words", "limit", "--path", "UVUVUV", "--n", "3")
    assert r["digits"][:2] == [2, 2]


def test_count_with_oracle():
    r = js("count", "[0; 3, (1)]", "--oracle", "1000")
    assert r["count"] == 1 and r["N"] == 1 and r["oracle_agrees"]
    assert r["witnesses"][0] == {"n": 1, "p": 0, "q": 1, "lambda": "(5 + 1*sqrt(5))/2"}
    r = js("count", "[0; (1, 2)]")
    assert r["count"] == "infinite"


def test_classify_and_tilde():
    r = js("classify", "[0; 3, (1)]")
    assert r["shape"] == "beta_power" and r["N"] == 1
    assert js("tilde", "[0; (2)]")["tilde_m"] == "(3 + 2*sqrt(2))/2"
    assert js("oracle", "[0; (1, 2)]", "--qmax", "20") == [{"p": 1, "q": 1}, {"p": 3, "q": 4}, {"p": 11, "q": 15}]


@pytest.mark.parametrize("check", ["identities", "equal-value", "cor-cuts", "florek", "relbtrenorm", "lemma31"])
def test_verify_small(check):
    assert js("verify", check, "--depth", "3")["all_pass"]


def test_verify_jobs_deterministic():
    a = js("verify", "lex-cuts", "--depth", "4")
    b = js("verify", "lex-cuts", "--depth", "4", "--jobs", "2")
    assert a == b and a["all_pass"]


@pytest.mark.parametrize(
    "argv, code",
    [
        (["count", "[0; 1, 2"], 2),
        (["count", "[0; 2, 3]"], 1),
        (["forms", "--m", "6"], 1),
        (["spectrum", "--below", "2", "--max-m", "5"], 2),
        (["nonsense"], 2),
        (["words", "christoffel", "2", "4"], 1),
    ],
)
def test_exit_codes(argv, code):
    got, _, err = call(*argv)
    assert got == code
    assert err


def test_parse_error_reports_position():
    _, _, err = call("tilde", "[0; 1, x]")
    assert "position" in err


@pytest.mark.skipif(shutil.which("markov3") is None, reason="console script not installed")
def test_console_script():
    p = subprocess.run(["markov3", "tilde", "[0; (1)]"], capture_output=True, text=True)
    assert p.returncode == 0
    assert json.loads(p.stdout)["tilde_m"] == "(3 + 1*sqrt(5))/2"
