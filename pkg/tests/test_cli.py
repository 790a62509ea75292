import json

import pytest

from terna import DiagonalForm, PolySum, exceptional_set
from terna.cli import (
    ArityError,
    FormExpr,
    FormParseError,
    TermExpr,
    main,
    parse_form,
    sieve_report_from_json,
    sieve_report_to_json,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_diagonal():
    assert parse_form("x^2+y^2+z^2").to_object() == DiagonalForm((1, 1, 1))
    assert parse_form("21x^2+14y^2+6z^2").to_object() == DiagonalForm((21, 14, 6))


def test_parse_polysum():
    assert parse_form("x(2x+1)+y(3y+1)+z(6z+1)").to_object() == PolySum.of((2, 1), (3, 1), (6, 1))
    assert parse_form("x(x+1)+y(2y+1)+z(3z+1)").to_object() == PolySum.of((1, 1), (2, 1), (3, 1))
    assert parse_form("x(3x)+y(3y+1)+z(3z+2)").to_object() == PolySum.of((3, 0), (3, 1), (3, 2))


def test_parse_mixed():
    assert parse_form("x^2+y(3y+1)+z(3z+2)").to_object() == PolySum.of((1, 0), (3, 1), (3, 2))


def test_parse_whitespace_insensitive():
    assert parse_form(" x^2 + y (3y + 1) + z(3 z+2) ") == parse_form("x^2+y(3y+1)+z(3z+2)")


def test_parse_errors():
    with pytest.raises(FormParseError):
        parse_form("x^2+y^2+w^2")
    with pytest.raises(FormParseError) as e:
        parse_form("x^2++z^2")
    assert e.value.position == 4
    with pytest.raises(FormParseError):
        parse_form("x(2y+1)+y^2+z^2")  # inner variable mismatch
    with pytest.raises(ArityError):
        parse_form("x^2+y^2")
    with pytest.raises(ArityError):
        parse_form("x^2+y^2+y^2")  # duplicate variable
    with pytest.raises(ArityError):
        parse_form("x^2+y^2+z^2+z^2")


def test_parse_render_round_trip():
    texts = [
        "x^2+y^2+z^2",
        "21x^2+14y^2+6z^2",
        "x(2x+1)+y(3y+1)+z(6z+1)",
        "x^2+y(3y+1)+z(3z+2)",
        "z^2+y(3y+1)+x(4x+3)",
        "x(2x)+y(2y+1)+z(2z+2)",
    ]
    for text in texts:
        expr = parse_form(text)
        assert expr.render() == text
        assert parse_form(expr.render()) == expr
    expr = FormExpr((TermExpr("y", True, 3, 0), TermExpr("x", False, 1, 2), TermExpr("z", False, 4, 0)))
    assert parse_form(expr.render()) == expr


def test_sieve_report_json_round_trip():
    report = exceptional_set(DiagonalForm((1, 1, 1)), 60)
    assert sieve_report_from_json(sieve_report_to_json(report)) == report


def test_sieve_report_csv():
    from terna.cli import sieve_report_to_csv

    report = exceptional_set(DiagonalForm((1, 1, 1)), 30)
    assert sieve_report_to_csv(report) == "exception\n7\n15\n23\n28\n"


def test_cli_exceptions_human(capsys):
    code, out, _ = run(capsys, "exceptions", "x^2+y^2+z^2", "--limit", "100", "--no-timing")
    assert code == 0
    assert "exceptions (15)" in out
    assert out.rstrip().endswith("95")


def test_cli_exceptions_json(capsys):
    code, out, _ = run(capsys, "exceptions", "x^2+y^2+z^2", "--limit", "100", "--json", "--no-timing")
    assert code == 0
    data = json.loads(out)
    assert data == {
        "form": "x^2+y^2+z^2",
        "limit": 100,
        "exceptions": [7, 15, 23, 28, 31, 39, 47, 55, 60, 63, 71, 79, 87, 92, 95],
        "elapsed_ms": 0,
    }


def test_cli_exceptions_csv(capsys):
    code, out, _ = run(capsys, "exceptions", "x^2+y^2+z^2", "--limit", "30", "--csv")
    assert code == 0
    assert out.splitlines()[0] == "exception"
    assert out.splitlines()[1:] == ["7", "15", "23", "28"]


def test_cli_deterministic_output(capsys):
    args = ("exceptions", "x(2x+1)+y(3y+1)+z(6z+1)", "--limit", "200", "--json", "--no-timing")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_cli_threads_do_not_change_output(capsys):
    base = ("exceptions", "x^2+y^2+3z^2", "--limit", "5000", "--json", "--no-timing")
    _, solo, _ = run(capsys, *base, "--threads", "1")
    _, duo, _ = run(capsys, *base, "--threads", "2")
    assert solo == duo


def test_cli_represent(capsys):
    code, out, _ = run(capsys, "represent", "x(2x+1)+y(3y+1)+z(6z+1)", "--n", "48")
    assert code == 0
    assert "no representation" in out
    code, out, _ = run(capsys, "represent", "x^2+y^2+z^2", "--n", "2", "--all")
    assert code == 0
    assert len(out.strip().splitlines()) == 12


def test_cli_witness(capsys):
    code, out, _ = run(capsys, "witness", "--triple", "1,2,3", "--n", "9", "--method", "constructive")
    assert code == 0
    assert "verified" in out
    code, out, _ = run(capsys, "witness", "--quad", "3,1,2,3", "--n", "5", "--method", "search")
    assert code == 0
    assert "verified" in out


def test_cli_witness_usage_errors(capsys):
    code, _, err = run(capsys, "witness", "--n", "9")
    assert code == 2
    code, _, err = run(capsys, "witness", "--triple", "9,9,9", "--n", "1")
    assert code == 2


def test_cli_survey(capsys):
    code, out, _ = run(capsys, "survey", "--theorem", "1.3")
    assert code == 0
    assert "(3,0,1,2)" in out and "(4,1,2,3)" in out and "total: 5" in out
    code, out, _ = run(capsys, "survey", "--theorem", "1.1", "--bounds", "8")
    assert code == 0
    assert "(2,3,7)" in out


def test_cli_crosscheck(capsys):
    code, out, _ = run(capsys, "crosscheck", "--family", "gauss", "--limit", "2000")
    assert code == 0
    assert "matches sieve" in out


def test_cli_conjecture(capsys):
    code, out, _ = run(capsys, "conjecture", "--limit", "500")
    assert code == 0
    assert out.count("empty") == 6


def test_cli_scan_remark21(capsys):
    code, out, _ = run(capsys, "scan-remark21", "--limit", "50")
    assert code == 0
    assert "r=6" in out and "r=14" in out


def test_cli_bridge(capsys):
    code, out, _ = run(capsys, "bridge", "--remark12", "--limit", "50")
    assert code == 0
    assert "agreement" in out


def test_cli_lemma(capsys):
    code, out, _ = run(capsys, "lemma", "--id", "2.1", "5", "5")
    assert code == 0 and "7^2+1^2" in out
    code, out, _ = run(capsys, "lemma", "--id", "2.2", "1", "6")
    assert code == 0
    code, out, _ = run(capsys, "lemma", "--id", "2.3ii", "12")
    assert code == 0
    code, out, _ = run(capsys, "lemma", "--id", "3.1", "4")
    assert code == 0
    # a lemma search that cannot succeed is a reported finding, not a crash
    code, out, _ = run(capsys, "lemma", "--id", "2.3i", "9")
    assert code == 1
    code, _, _ = run(capsys, "lemma", "--id", "2.1", "5")
    assert code == 2  # wrong arity


def test_cli_usage_errors(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "exceptions", "x^2+y^2", "--limit", "10")[0] == 2
    assert run(capsys, "represent", "x^2+y^2+w^2", "--n", "3")[0] == 2
