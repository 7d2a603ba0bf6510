"""Text grammar, serialization helpers, and the command-line interface
end to end (exit codes, formats, determinism)."""

import io
import json
from fractions import Fraction

import pytest

from fthresh import MonomialIdeal, OrdinaryPowers, SymbolicSquarefree
from fthresh.cli import main
from fthresh.serial import (
    ParseError,
    decimal_string,
    format_fraction,
    parse_fraction,
    parse_ideal,
    parse_monomial_text,
    read_source,
)

F = Fraction


# ------------------------------------------------------------------ #
# grammar
# ------------------------------------------------------------------ #


def test_parse_fraction():
    assert parse_fraction(" 3/4 ") == F(3, 4)
    assert parse_fraction("5") == 5
    with pytest.raises(ParseError) as err:
        parse_fraction("three")
    assert err.value.token == "three" and err.value.position == 0


def test_decimal_string_truncates():
    assert decimal_string(F(5, 8), 3) == "0.625"
    assert decimal_string(F(-5, 8), 3) == "-0.625"
    assert decimal_string(F(2, 3), 4) == "0.6666"
    assert decimal_string(3, 2) == "3.00"
    assert decimal_string(F(5, 2), 1) == "2.5"


def test_format_fraction():
    assert format_fraction(F(5, 6)) == "5/6"
    assert format_fraction(F(14, 7)) == "2"
    assert format_fraction(F(5, 6), decimal=3) == "5/6 (~0.833)"


def test_parse_monomial_text():
    assert parse_monomial_text("x1^2*x3") == [2, 0, 1]
    assert parse_monomial_text("x1^2*x3", nvars=4) == [2, 0, 1, 0]
    assert parse_monomial_text("x2*x2") == [0, 2]
    assert parse_monomial_text("[2,0,1]") == [2, 0, 1]
    assert parse_monomial_text("1") == []
    assert parse_monomial_text("1", nvars=2) == [0, 0]
    for bad in ["", "y2", "x0", "x1^", "[2,-1]", "[2.5]"]:
        with pytest.raises(ParseError):
            parse_monomial_text(bad)
    with pytest.raises(ParseError):
        parse_monomial_text("x1*x3", nvars=2)


def test_parse_ideal_forms():
    assert parse_ideal("m", 3) == MonomialIdeal.maximal(3)
    assert parse_ideal("0", 2) == MonomialIdeal.zero(2)
    with pytest.raises(ParseError):
        parse_ideal("m")
    with pytest.raises(ParseError):
        parse_ideal("0")
    obj = parse_ideal('{"vars": 2, "generators": [[2, 0], [0, 3]]}')
    assert obj == MonomialIdeal.from_exponents(2, [[2, 0], [0, 3]])
    arr = parse_ideal("[[2], [0, 3]]")
    assert arr == MonomialIdeal.from_exponents(2, [[2, 0], [0, 3]])
    semi = parse_ideal("x1^2; x2^3")
    assert semi == MonomialIdeal.from_exponents(2, [[2, 0], [0, 3]])
    assert parse_ideal("x1^2; x2^3;") == semi
    assert parse_ideal("x1*x2", 3).nvars == 3
    with pytest.raises(ParseError):
        parse_ideal("x1; x2*x3", 2)
    with pytest.raises(ParseError):
        parse_ideal('{"vars": 2, "generators": [[2')


def test_read_source(tmp_path, monkeypatch):
    assert read_source("x1^2") == "x1^2"
    path = tmp_path / "ideal.txt"
    path.write_text("x1; x2\n")
    assert read_source(f"@{path}") == "x1; x2\n"
    monkeypatch.setattr("sys.stdin", io.StringIO("from stdin"))
    assert read_source("-") == "from stdin"
    monkeypatch.setattr("sys.stdin", io.StringIO("again"))
    assert read_source(None) == "again"


# ------------------------------------------------------------------ #
# CLI verbs
# ------------------------------------------------------------------ #


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_cli_nu(capsys):
    code, out = run_cli(
        capsys, "nu", "--ideal", "x1*x2", "--nvars", "2", "-p", "3", "-e", "2"
    )
    assert code == 0
    data = json.loads(out)
    assert data["q"] == 9 and data["nu"] == 8 and data["ratio"] == "8/9"
    assert data["status"] == "finite"


def test_cli_nu_missing_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["nu", "--ideal", "x1*x2", "--nvars", "2", "-p", "3"])
    assert err.value.code == 2


def test_cli_unknown_verb_exits_2():
    with pytest.raises(SystemExit) as err:
        main(["frobenius"])
    assert err.value.code == 2


def test_cli_nu_seq_csv(capsys):
    code, out = run_cli(
        capsys,
        "nu-seq", "--ideal", "x1*x2", "--nvars", "2",
        "-p", "2", "--emax", "3", "--format", "csv",
    )
    assert code == 0
    assert out.splitlines() == [
        "e,q,nu,ratio",
        "0,1,0,0",
        "1,2,1,1/2",
        "2,4,3,3/4",
        "3,8,7,7/8",
    ]


def test_cli_fthreshold_exact_and_decimal(capsys):
    code, out = run_cli(capsys, "fthreshold", "--ideal", "x1^2;x2^3")
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "exact" and data["value"] == "5/6"
    assert data["method"] == "rees_valuation"
    code, out = run_cli(
        capsys, "fthreshold", "--ideal", "x1^2;x2^3", "--decimal", "3"
    )
    assert json.loads(out)["value_decimal"] == "0.833"


def test_cli_fthreshold_from_stdin_filtration(capsys, monkeypatch):
    f = SymbolicSquarefree(
        MonomialIdeal.from_exponents(3, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    )
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(f.to_json())))
    code, out = run_cli(capsys, "fthreshold")
    assert code == 0
    assert json.loads(out)["value"] == "2"


def test_cli_fthreshold_bracket_requires_p(capsys):
    prod = json.dumps(
        {
            "rule": "product",
            "left": {"rule": "ordinary", "ideal": {"vars": 1, "generators": [[2]]}},
            "right": {"rule": "ordinary", "ideal": {"vars": 1, "generators": [[3]]}},
        }
    )
    code, out = run_cli(capsys, "fthreshold", "--filtration", prod)
    assert code == 1
    assert json.loads(out)["error"]["type"] == "CapabilityError"
    code, out = run_cli(
        capsys, "fthreshold", "--filtration", prod, "-p", "2", "--emax", "3"
    )
    assert code == 0
    data = json.loads(out)
    # level r is (x^{5r}), so the true threshold is 1/5; the bracket is
    # sound around it
    assert data["kind"] == "bracket"
    assert data["lower"] == "1/8" and data["upper"] == "1/5"
    assert data["e_max"] == 3


def test_cli_symbolic_table(capsys):
    code, out = run_cli(
        capsys,
        "symbolic", "--ideal", "[[1,1,0],[0,1,1],[1,0,1]]", "--format", "table",
    )
    assert code == 0
    assert "value: 2" in out


def test_cli_rees_and_newton(capsys):
    code, out = run_cli(capsys, "rees", "--ideal", "x1^2;x2^3")
    assert code == 0
    data = json.loads(out)
    assert data["threshold"] == "5/6"
    assert data["rees_valuations"] == [{"normal": [3, 2], "offset": 6}]
    code, out = run_cli(capsys, "newton", "--ideal", "x1^2;x2^3")
    data = json.loads(out)
    assert data["essential_facets"] == [{"normal": [3, 2], "offset": 6}]
    assert len(data["coordinate_facets"]) == 2


def test_cli_waldschmidt(capsys):
    code, out = run_cli(
        capsys, "waldschmidt", "--ideal", "x1^2;x2^3", "--weights", "3,2"
    )
    assert code == 0
    assert json.loads(out)["exact"] == "6"
    code, out = run_cli(capsys, "waldschmidt", "--ideal", "x1^2;x2^3")
    assert json.loads(out)["exact"] == "2"


def test_cli_hypergraph(capsys):
    graph = '{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]}'
    code, out = run_cli(capsys, "hypergraph", "--graph", graph, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ordinary_threshold"] == "5/2"
    assert data["symbolic_threshold"] == "3"
    assert data["transitive_equality"] is True


def test_cli_laws(capsys):
    left = json.dumps(
        {"rule": "ordinary", "ideal": {"vars": 2, "generators": [[1, 1]]}}
    )
    right = json.dumps(
        {"rule": "symbolic", "ideal": {"vars": 2, "generators": [[1, 0], [0, 1]]}}
    )
    code, out = run_cli(
        capsys, "laws", "--left", left, "--right", right, "-p", "2", "--emax", "2"
    )
    assert code == 0
    data = json.loads(out)
    assert data["min_law"]["ok"] is True
    assert data["disjoint_laws"]["ok"] is True


def test_cli_parse_error_exits_1(capsys):
    code, out = run_cli(capsys, "fthreshold", "--ideal", "x1^2;x2^?")
    assert code == 1
    err = json.loads(out)["error"]
    assert err["type"] == "ParseError" and "x2^?" in err["message"]


def test_cli_missing_file_exits_1(capsys):
    code, out = run_cli(capsys, "fthreshold", "--ideal", "@/no/such/file")
    assert code == 1
    assert json.loads(out)["error"]["type"] == "FileNotFoundError"


def test_cli_deterministic_output(capsys):
    args = ("hypergraph", "--graph", '{"n":4,"edges":[[0,1],[1,2],[2,3]]}',
            "--format", "json")
    _, first = run_cli(capsys, *args)
    _, second = run_cli(capsys, *args)
    assert first == second


def test_cli_verify_examples(capsys):
    code, out = run_cli(capsys, "verify-examples")
    assert code == 0
    assert out.strip().endswith("20/20 fixtures passed")
    code, out = run_cli(capsys, "verify-examples", "--filter", "odd-cycle")
    assert code == 0 and "4/4 fixtures passed" in out
    code, out = run_cli(
        capsys, "verify-examples", "--corrupt", "ceiling-threshold"
    )
    assert code == 1 and "FAIL" in out
    code, out = run_cli(capsys, "verify-examples", "--format", "json")
    data = json.loads(out)
    assert data["all_pass"] is True and len(data["rows"]) == 20
