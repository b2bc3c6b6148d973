from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given

from conftest import polys
from nambu.exact_algebra import Poly, RatFn, rf_equal
from nambu.expression import (ParseError, format_expr, parse_expression, parse_poly,
                              parse_ratfn)


def test_examples():
    t1, t2, t3 = Poly.gens(3)
    assert parse_poly("t1*t2 + t3") == t1 * t2 + t3
    assert parse_poly("(t1 + t2)^2", 3) == t1 ** 2 + t2 ** 2 + t1 * t2 * 2
    assert parse_poly("3/2*t1") == Poly(1, {(1,): Fraction(3, 2)})


def test_nvars_defaults_to_max_index():
    assert parse_expression("t4").nvars == 4
    assert parse_expression("7").nvars == 1
    assert parse_expression("t1", nvars=3).nvars == 3


def test_laurent_and_ratfn():
    x = parse_poly("x1^-2*x2", laurent=True)
    assert x.coeff((-2, 1)) == 1
    r = parse_ratfn("t1^2 : (t1*t2)")
    assert rf_equal(r, parse_ratfn("t1 : t2"))
    # Laurent input is cleared to polynomial / monomial
    r = parse_ratfn("x1^-1 + x2")
    assert rf_equal(r, parse_ratfn("(1 + x1*x2) : x1"))


def test_prefix_kept_when_printing():
    e = parse_expression("x1^2 + x2")
    assert e.prefix == "x" and e.format() == "x1^2 + x2"


@pytest.mark.parametrize("text, col", [
    ("t1 +", 5),
    ("(t1", 4),
    ("t1 $ t2", 4),
    ("t1^-1", 5),
    ("t1^t2", 4),
    ("2 / 3", 3),
    ("t0", 1),
])
def test_errors_carry_position(text, col):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert info.value.line == 1
    assert info.value.column == col


def test_ratio_outside_ratfn_mode():
    with pytest.raises(ParseError):
        parse_expression("t1 : t2", "poly")


def test_zero_denominator():
    with pytest.raises(ParseError, match="zero denominator"):
        parse_expression("t1 : 0", "ratfn")


def test_index_exceeds_nvars():
    with pytest.raises(ParseError):
        parse_expression("t3", nvars=2)


def test_mixed_prefixes_rejected():
    with pytest.raises(ParseError):
        parse_expression("t1 + x2")


def test_unknown_mode():
    with pytest.raises(ValueError):
        parse_expression("t1", "matrix")


def test_format_order_and_signs():
    assert format_expr(parse_poly("7 - t2 + t1^2")) == "t1^2 - t2 + 7"
    assert format_expr(Poly(2, {})) == "0"
    assert format_expr(parse_poly("-1/2*t1")) == "-1/2*t1"


@given(polys(3))
def test_round_trip_poly(f):
    text = format_expr(f)
    assert parse_poly(text, 3) == f


@given(polys(3, laurent=True))
def test_round_trip_laurent(f):
    text = format_expr(f)
    assert parse_poly(text, 3, laurent=True) == f


@given(polys(2), polys(2).filter(bool))
def test_round_trip_ratfn(f, g):
    r = RatFn(f, g)
    back = parse_expression(format_expr(r), "ratfn", 2).value
    assert rf_equal(back, r)


def test_corpus_fixpoint():
    corpus = Path(__file__).parent / "data" / "corpus.txt"
    lines = [ln for ln in corpus.read_text().splitlines() if ln and not ln.startswith("#")]
    assert len(lines) >= 50
    for line in lines:
        mode, text = line.split(" ", 1)
        once = format_expr(parse_expression(text, mode))
        twice = format_expr(parse_expression(once, mode))
        assert once == twice, line
