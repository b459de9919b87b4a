import csv
import io
import json

import pytest
from click.testing import CliRunner

from smallpart import svalues
from smallpart.cli import main
from smallpart.svalues import pell_witness, s_of, signed_factorize


@pytest.fixture
def runner():
    return CliRunner()


# --- p ------------------------------------------------------------------------


def test_p_text(runner):
    assert runner.invoke(main, ["p", "17"]).output == "297\n"
    assert runner.invoke(main, ["p", "0"]).output == "1\n"
    assert runner.invoke(main, ["p", "37"]).output == "21637\n"


def test_p_formats(runner):
    result = runner.invoke(main, ["p", "17", "--format", "json"])
    document = json.loads(result.output)
    assert document["command"] == "p"
    assert document["report"] == {"n": 17, "p": "297"}

    result = runner.invoke(main, ["p", "17", "--format", "csv"])
    rows = list(csv.DictReader(io.StringIO(result.output)))
    assert rows == [{"n": "17", "p": "297"}]


def test_p_usage_errors(runner):
    assert runner.invoke(main, ["p", "--", "-1"]).exit_code == 2
    assert runner.invoke(main, ["p", "abc"]).exit_code == 2
    assert runner.invoke(main, ["p"]).exit_code == 2


# --- stable ---------------------------------------------------------------------


def test_stable_text_rows(runner):
    result = runner.invoke(main, ["stable", "--max", "37"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 1 + 37 + 1  # header, rows, residue footnote
    row3 = lines[3].split()
    assert row3 == ["3", "73", "4", "13", "1", "2"]
    row22 = lines[22].split()
    assert row22 == ["22", "529", "-", "-", "-", "3"]
    row1 = lines[1].split()
    assert row1 == ["1", "25", "-", "-", "-", "1"]


def test_stable_csv_byte_stable_and_round_trips(runner):
    first = runner.invoke(main, ["stable", "--max", "37", "--format", "csv"]).output
    second = runner.invoke(main, ["stable", "--max", "37", "--format", "csv"]).output
    assert first == second
    assert first.startswith("i,m,y0,x0,residue,s\n")
    assert "\r" not in first

    rows = list(csv.DictReader(io.StringIO(first)))
    assert len(rows) == 37
    for row in rows:
        i = int(row["i"])
        m = 24 * i + 1
        assert int(row["m"]) == m
        assert int(row["s"]) == s_of(i)
        pell_primes = [p for p, e in signed_factorize(m).factors
                       if p % 24 == 1 and e % 2 == 1]
        if pell_primes:
            witness = pell_witness(pell_primes[0])
            assert int(row["y0"]) == witness.y0
            assert int(row["x0"]) == witness.x0
            assert int(row["residue"]) == witness.residue_mod_12
        else:
            assert row["y0"] == "" and row["x0"] == "" and row["residue"] == ""


def test_stable_json(runner):
    result = runner.invoke(main, ["stable", "--max", "4", "--format", "json"])
    document = json.loads(result.output)
    assert document["version"]
    assert document["command"] == "stable"
    rows = document["rows"]
    assert rows[2] == {"i": 3, "m": 73, "y0": 4, "x0": 13, "residue": 1, "s": "2"}
    assert rows[0] == {"i": 1, "m": 25, "y0": None, "x0": None, "residue": None, "s": "1"}
    # recompute from the library: identical values
    for row in rows:
        assert int(row["s"]) == s_of(row["i"])


def test_stable_usage_error(runner):
    assert runner.invoke(main, ["stable", "--max", "0"]).exit_code == 2


# --- parity -----------------------------------------------------------------------


def test_parity_text(runner):
    result = runner.invoke(main, ["parity", "37"])
    assert result.exit_code == 0
    assert "p(n) = 21637" in result.output
    assert "P_O - P_E = 15907" in result.output
    assert "P_O = 18772" in result.output
    assert "P_E = 2865" in result.output

    result = runner.invoke(main, ["parity", "1"])
    assert "P_O = 1" in result.output
    assert "P_E = 0" in result.output


def test_parity_formats(runner):
    result = runner.invoke(main, ["parity", "17", "--format", "json"])
    report = json.loads(result.output)["report"]
    assert report == {"n": 17, "p": "297", "diff": "201", "p_odd": "249", "p_even": "48"}

    result = runner.invoke(main, ["parity", "17", "--format", "csv"])
    rows = list(csv.DictReader(io.StringIO(result.output)))
    assert rows == [{"n": "17", "p": "297", "diff": "201", "p_odd": "249", "p_even": "48"}]


def test_parity_usage_error(runner):
    assert runner.invoke(main, ["parity", "0"]).exit_code == 2


# --- trace-s -----------------------------------------------------------------------


def test_trace_s_pell_case(runner):
    result = runner.invoke(main, ["trace-s", "3"])
    assert result.exit_code == 0
    assert "73" in result.output
    assert "y=4" in result.output
    assert "169 = 13^2" in result.output
    assert "1 (mod 12)" in result.output
    assert "S(3) = 2" in result.output


def test_trace_s_zero_case(runner):
    result = runner.invoke(main, ["trace-s", "6"])
    assert "145 = (-5) * (-29)" in result.output
    assert "odd exponent -> 0" in result.output
    assert "S(6) = 0" in result.output


def test_trace_s_negative_prime_square(runner):
    result = runner.invoke(main, ["trace-s", "22"])
    assert "529 = (-23)^2" in result.output
    assert "negative" in result.output
    assert "S(22) = 3" in result.output


# --- verify -------------------------------------------------------------------------


def test_verify_passes(runner):
    result = runner.invoke(main, ["verify", "--max-n", "10", "--max-i", "10"])
    assert result.exit_code == 0
    assert "all 16 suites passed" in result.output
    assert "FAIL" not in result.output


def test_verify_tiny_bounds(runner):
    result = runner.invoke(main, ["verify", "--max-n", "1", "--max-i", "1"])
    assert result.exit_code == 0


def test_verify_reports_counterexample_on_fault(runner, monkeypatch):
    healthy = svalues.s_of

    def corrupted(i):
        # +2 keeps the parity of the convolution intact, so every affected
        # suite reports a clean expected/got counterexample.
        return healthy(i) + (2 if i == 5 else 0)

    monkeypatch.setattr(svalues, "s_of", corrupted)
    result = runner.invoke(main, ["verify", "--max-n", "8", "--max-i", "8"])
    assert result.exit_code == 1
    assert "FAIL" in result.output
    assert "expected" in result.output and "got" in result.output


def test_verify_survives_a_crashing_suite(runner, monkeypatch):
    healthy = svalues.s_of

    def corrupted(i):
        # +1 flips the parity of the convolution, which makes parity_counts
        # raise; verify must report that as a failure, not crash.
        return healthy(i) + (1 if i == 5 else 0)

    monkeypatch.setattr(svalues, "s_of", corrupted)
    result = runner.invoke(main, ["verify", "--max-n", "8", "--max-i", "8"])
    assert result.exit_code == 1
    assert "raised" in result.output


def test_verify_usage_error(runner):
    assert runner.invoke(main, ["verify", "--max-n", "0"]).exit_code == 2
