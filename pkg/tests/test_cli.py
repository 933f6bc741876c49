import io
import json
import subprocess
import sys

import pytest

from sumzero.cli import main
from sumzero.poly import IntPoly
from sumzero.reference import FN0_TABLE, FN_TABLE, normalize


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_table_latex_fn0():
    code, text = run("table", "--space", "fn0", "--n", "2..8", "--format", "latex")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 7
    assert normalize(lines[0]) == normalize(r"2 & $E-4$ \\")


@pytest.mark.parametrize("space, table", [("fn", FN_TABLE), ("fn0", FN0_TABLE)])
def test_latex_matches_published_body(space, table):
    _, text = run("table", "--space", space, "--n", "2..8", "--format", "latex")
    expected = [normalize(f"{n} & {table[n]} \\\\") for n in range(2, 9)]
    assert [normalize(line) for line in text.splitlines()] == expected


def test_table_json_record():
    code, text = run("table", "--space", "fn", "--n", "1", "--format", "json")
    assert code == 0
    assert json.loads(text) == {"n": 1, "space": "fn", "coeffs": ["0", "1"]}


def test_table_plain_row():
    _, text = run("table", "--space", "fn0", "--n", "6", "--format", "plain")
    assert text == "E^5 - 15E^4 + 85E^3 - 270E^2 + 864E - 4320\n"


def test_table_csv():
    _, text = run("table", "--space", "fn0", "--n", "5", "--format", "csv")
    assert text == "5,4,600,-50,35,-10,1\n"


@pytest.mark.parametrize("space", ["fn", "fn0"])
def test_json_rows_reparse(space):
    from sumzero.classes import class_polynomial

    _, text = run("table", "--space", space, "--n", "1..12", "--format", "json")
    for line in text.splitlines():
        rec = json.loads(line)
        expected = class_polynomial(space, rec["n"]).poly
        assert IntPoly.from_json(line, expected.var) == expected


def test_stirling_rows():
    assert run("stirling", "--kind", "sm", "--n", "4") == (0, "96, 20, 6, 1\n")
    assert run("stirling", "--kind", "s", "--n", "3") == (0, "2, 3, 1\n")
    assert run("stirling", "--kind", "s", "--n", "1") == (0, "1\n")
    _, text = run("stirling", "--kind", "sm", "--n", "2..3", "--format", "json")
    assert [json.loads(t)["values"] for t in text.splitlines()] == [["4", "1"], ["18", "3", "1"]]


def test_poincare():
    assert run("poincare", "--space", "fn0", "--n", "2") == (0, "x^2 + 2x - 3\n")
    assert run("poincare", "--space", "fn", "--n", "1", "--sx", "[1,2,1]") == (0, "x^2 + 2x + 1\n")
    assert run("poincare", "--space", "fn0", "--n", "1") == (0, "1\n")


def test_usage_errors(capsys):
    assert run("poincare", "--n", "2", "--sx", "[1, 0.5]")[0] == 2
    assert run("poincare", "--n", "2", "--sx", "not json")[0] == 2
    assert run("table", "--n", "8..2")[0] == 2
    assert run("table", "--n", "9", "--n-max", "8")[0] == 2
    assert "error" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        main(["table", "--format", "yaml"])
    assert exc.value.code == 2


def test_output_is_deterministic():
    assert run("table", "--n", "2..8") == run("table", "--n", "2..8")


def test_verify_passes():
    code, text = run("verify")
    assert code == 0
    assert "FAIL" not in text


def test_verify_zero_budget_skips_oracles():
    code, text = run("verify", "--oracle-budget", "0")
    assert code == 0
    assert text.count("SKIP") == 3


def test_verify_n_max_8_includes_tables():
    code, text = run("verify", "--n-max", "8")
    assert code == 0
    assert "PASS  table-fn  (7 rows)" in text
    assert "PASS  table-fn0  (7 rows)" in text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sumzero", "table", "--n", "2"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout == "E - 4\n"
