import csv
import io
import json
from fractions import Fraction
from math import comb

import pytest

from riordankit.cli import EXIT_FAIL, EXIT_OK, EXIT_ORDER, EXIT_USAGE, main

PASCAL_5 = """\
1 0 0 0 0
1 1 0 0 0
1 2 1 0 0
1 3 3 1 0
1 4 6 4 1
"""

PASCAL_INV_5 = """\
 1  0  0  0 0
-1  1  0  0 0
 1 -2  1  0 0
-1  3 -3  1 0
 1 -4  6 -4 1
"""


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def table(text):
    return [[Fraction(x) for x in line.split()] for line in text.splitlines() if line.strip()]


class TestShow:
    def test_pascal(self):
        assert run("show", "pascal", "--rows", "5") == (EXIT_OK, PASCAL_5)

    def test_identity_from_expressions(self):
        code, text = run("show", "--g", "1", "--f", "t", "--rows", "4")
        assert code == EXIT_OK
        assert table(text) == [[int(i == j) for j in range(4)] for i in range(4)]

    def test_catalan_array(self):
        code, text = run("show", "catalan-array", "--rows", "5")
        expected = [[Fraction(k + 1, 2 * n - k + 1) * comb(2 * n - k + 1, n - k) if k <= n else 0
                     for k in range(5)] for n in range(5)]
        assert table(text) == expected

    def test_csv_round_trip(self):
        code, text = run("show", "--g", "1/(2-t)", "--f", "t/(1-t)", "--rows", "4", "--format", "csv")
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == ["n", "k", "value"]
        assert len(rows) == 1 + 10
        for _, _, v in rows[1:]:
            assert str(Fraction(v)) == v
        assert ["0", "0", "1/2"] in rows

    def test_jsonl(self):
        code, text = run("show", "pascal", "--rows", "3", "--format", "jsonl")
        recs = [json.loads(line) for line in text.splitlines()]
        assert recs[-1] == {"n": 2, "k": 2, "value": "1"}
        assert all(str(Fraction(r["value"])) == r["value"] for r in recs)

    def test_rows_beyond_order(self):
        assert run("show", "pascal", "--rows", "30")[0] == EXIT_ORDER

    def test_parse_error(self, capsys):
        assert run("show", "--g", "1/(1-t", "--f", "t")[0] == EXIT_USAGE
        assert "byte 6" in capsys.readouterr().err

    def test_semantic_error(self):
        assert run("show", "--g", "1/t", "--f", "t")[0] == EXIT_USAGE
        assert run("show", "--g", "1", "--f", "1+t")[0] == EXIT_USAGE

    def test_name_and_expressions_conflict(self):
        assert run("show", "pascal", "--g", "1")[0] == EXIT_USAGE

    def test_unknown_array(self):
        assert run("show", "nope")[0] == EXIT_USAGE


class TestGroupCommands:
    def test_inverse(self):
        assert run("inverse", "pascal", "--rows", "5") == (EXIT_OK, PASCAL_INV_5)

    def test_multiply_inverse_is_identity(self):
        code, text = run("multiply", "pascal", "--g2", "1/(1+t)", "--f2", "t/(1+t)", "--rows", "5")
        assert code == EXIT_OK
        assert table(text) == [[int(i == j) for j in range(5)] for i in range(5)]

    def test_multiply_named(self):
        code, text = run("multiply", "pascal", "pascal", "--rows", "4")
        assert table(text) == [[comb(n, k) * 2 ** (n - k) if k <= n else 0 for k in range(4)]
                               for n in range(4)]


class TestOnepth:
    def test_horizontal_match(self, capsys):
        code, text = run("onepth", "pascal", "-p", "2", "-r", "0", "--orientation", "horizontal",
                         "--rows", "4", "--check-oracle")
        assert code == EXIT_OK
        assert text.endswith("MATCH\n")
        assert [row[0] for row in table(text.replace("MATCH", ""))] == [1, 2, 6, 20]
        assert "effective parent order" in capsys.readouterr().err

    def test_horizontal_p1_is_source(self):
        code, text = run("onepth", "delannoy", "-p", "1", "-r", "0", "--orientation", "horizontal",
                         "--rows", "6")
        assert text == run("show", "delannoy", "--rows", "6")[1]

    def test_vertical_p1_toeplitz(self):
        code, text = run("onepth", "pascal", "-p", "1", "-r", "0", "--orientation", "vertical",
                         "--rows", "5")
        assert table(text) == [[int(k <= n) for k in range(5)] for n in range(5)]

    def test_auto_raises_parent_order(self, capsys):
        code, text = run("onepth", "catalan-array", "-p", "4", "-r", "3", "--orientation", "vertical",
                         "--rows", "8", "--order", "10", "--check-oracle")
        assert code == EXIT_OK and "MATCH" in text
        assert "effective parent order: 31" in capsys.readouterr().err

    def test_expression_source(self):
        code, text = run("onepth", "--g", "1/(1-t)", "--f", "t*(1+t)/(1-t)", "-p", "2", "-r", "0",
                         "--orientation", "horizontal", "--rows", "5", "--check-oracle")
        assert code == EXIT_OK
        assert [row[0] for row in table(text.replace("MATCH", ""))] == [1, 3, 13, 63, 321]

    def test_bad_p(self):
        assert run("onepth", "pascal", "-p", "0", "--orientation", "vertical")[0] == EXIT_USAGE

    def test_missing_orientation(self):
        assert run("onepth", "pascal", "-p", "2")[0] == EXIT_USAGE


class TestAseq:
    def test_pascal(self):
        code, text = run("aseq", "pascal", "--order", "6")
        lines = dict(line.split(": ", 1) for line in text.splitlines())
        assert lines["A"].startswith("1, 1, 0, 0")
        assert lines["Z"].startswith("1, 0, 0")

    def test_fib_catalan(self):
        code, text = run("aseq", "fib-catalan", "--order", "8")
        assert text.splitlines()[0] == "A: " + ", ".join(["1"] * 8)

    def test_appell(self):
        code, text = run("aseq", "--g", "1/(1-t)", "--f", "t", "--order", "5")
        assert text.splitlines()[0] == "A: 1, 0, 0, 0, 0"

    def test_no_z_when_unnormalised(self):
        code, text = run("aseq", "--g", "2", "--f", "t/(1-t)", "--order", "5")
        assert code == EXIT_OK and "Z:" not in text

    def test_formula(self):
        for o in ("vertical", "horizontal"):
            code, text = run("aseq", "delannoy", "--formula", "-p", "3", "-r", "1", "--orientation", o,
                             "--order", "12")
            assert code == EXIT_OK and "verdict: EQUAL" in text

    def test_formula_needs_p(self):
        assert run("aseq", "pascal", "--formula")[0] == EXIT_USAGE


class TestIdentities:
    def test_default_run(self):
        code, text = run("identities")
        assert code == EXIT_OK
        assert "FAIL" not in text

    def test_gould_grid(self):
        code, text = run("identities", "--suite", "gould", "--r-grid", "1/2,3")
        assert code == EXIT_OK
        assert "1/2,3" in text

    def test_unknown_suite(self):
        assert run("identities", "--suite", "nope")[0] == EXIT_USAGE

    def test_verbose_jsonl(self):
        code, text = run("identities", "--suite", "chu-vandermonde", "--n-max", "3", "--verbose",
                         "--format", "jsonl")
        recs = [json.loads(line) for line in text.splitlines()]
        cases = [r for r in recs if "pass" in r and "lhs" in r]
        assert len(cases) == 10
        assert set(cases[0]) >= {"suite", "name", "params", "lhs", "rhs", "pass"}
        assert all(r["pass"] for r in cases)

    def test_perturbed_beta_exit_1(self):
        code, text = run("identities", "--suite", "summation", "--n-max", "3", "--perturb-beta")
        assert code == EXIT_FAIL
        assert "p=1" in text and "n=1" in text


class TestSeriesAndBell:
    def test_series(self):
        assert run("series", "(1-sqrt(1-4*t))/(2*t)", "--order", "5") == (EXIT_OK, "1, 1, 2, 5, 14, 42\n")

    def test_revert(self):
        assert run("series", "t-t^2", "--revert", "--order", "6")[1] == "0, 1, 1, 2, 5, 14, 42\n"

    def test_series_errors(self):
        assert run("series", "1/t")[0] == EXIT_USAGE
        assert run("series", "1+")[0] == EXIT_USAGE

    def test_bell(self):
        code, text = run("bell", "--f", "t/(1-t)", "--n-max", "6")
        assert code == EXIT_OK and "MATCH" in text

    def test_no_command(self):
        assert run()[0] == EXIT_USAGE
