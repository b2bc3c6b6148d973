import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import polys
from nambu.exact_algebra import Poly, RatFn, random_poly
from nambu.expression import parse_poly, parse_ratfn
from nambu.grading_valuation import (CLASSICAL, INFINITY, WEYL, OrderedValue, SingularPointError,
                                     WeightValuation, adams_valuations, adams_w,
                                     check_w_valuation, graded_bracket, is_classical,
                                     is_homogeneous, leading_form, point_valuation_classify,
                                     rf_value, torus_faithful_check, value_of)
from nambu.nambu_bracket import (QUOTIENT, SHIFTED, Potential, Torus, bracket, fermat,
                                 poly_partial, weyl)


def W(alg, *w):
    return WeightValuation(alg, w)


A4 = Potential(3, parse_poly("t1*t2*t3*t4"))


# ordered values

def test_order_is_sum_then_lex():
    a, b = OrderedValue((1, 0)), OrderedValue((0, 2))
    assert a < b
    assert OrderedValue((2, 0)) > OrderedValue((0, 2))
    assert OrderedValue(3) == 3
    assert OrderedValue(1) < INFINITY
    assert INFINITY + OrderedValue(5) is INFINITY
    with pytest.raises(ValueError):
        OrderedValue((1, 2)) < OrderedValue(1)


vals = st.tuples(st.integers(-5, 5), st.integers(-5, 5)).map(OrderedValue)


@given(vals, vals, vals)
def test_order_total_and_translation_invariant(a, b, c):
    assert (a < b) + (a == b) + (a > b) == 1
    if a < b:
        assert a + c < b + c
    assert (a + b) - b == a


# values

def test_value_examples():
    v = W(A4, 1, 1, 1, 1)
    assert value_of(v, parse_poly("t1*t2 + t3", 4)) == 1
    assert value_of(v, Poly(4, {})) is INFINITY
    T = Torus(3, 1)
    assert value_of(W(T, -1, 0, 0), parse_poly("x1^2 + x2", 3)) == -2


def test_rf_value_examples():
    v = W(A4, 1, 1, 1, 1)
    assert rf_value(v, parse_ratfn("t1 : t2", 4)) == 0
    assert rf_value(v, parse_ratfn("(t1^2 + t1^3) : t1", 4)) == 1


def test_leading_form_examples():
    v = W(A4, 1, 1, 1, 1)
    assert leading_form(v, parse_poly("t1*t2 + t3", 4)) == parse_poly("t3", 4)
    f = parse_poly("t1*t2 + t3*t4", 4)
    assert leading_form(v, f) == f
    assert leading_form(W(A4, 1, 2, 1, 1), parse_poly("t1 - t2", 4)) == parse_poly("t1", 4)
    with pytest.raises(ValueError):
        leading_form(v, Poly(4, {}))


def test_weight_count_mismatch():
    with pytest.raises(ValueError):
        W(A4, 1, 1)
    with pytest.raises(ValueError):
        WeightValuation(A4, (OrderedValue((1, 0)), 1, 1, 1))


VALS = [
    W(A4, 1, 2, 0, -1),
    WeightValuation(A4, [OrderedValue(x) for x in ((1, 0), (0, 1), (2, -1), (0, 0))]),
    W(Torus(3, 2, (1, 0, 0)), -1, 3, 2),
]


@pytest.mark.parametrize("v", VALS)
def test_multiplicative_and_ultrametric(v):
    rng = random.Random(5)
    laurent = isinstance(v.algebra, Torus)
    for _ in range(200):
        f = random_poly(rng, v.algebra.nvars, 3, (-3, 3), 4, laurent)
        g = random_poly(rng, v.algebra.nvars, 3, (-3, 3), 4, laurent)
        vf, vg = value_of(v, f), value_of(v, g)
        assert value_of(v, f * g) == vf + vg
        s = value_of(v, f + g)
        assert s >= min(vf, vg)
        if vf != vg:
            assert s == min(vf, vg)
        if f and g:
            assert leading_form(v, f * g) == leading_form(v, f) * leading_form(v, g)


@given(polys(2), polys(2).filter(bool), polys(2).filter(bool))
def test_rf_value_representative_independent(f, g, h):
    alg = Torus(2, 1)
    v = W(alg, 2, -3)
    f, g, h = f.as_laurent(), g.as_laurent(), h.as_laurent()
    assert rf_value(v, RatFn(f, g)) == rf_value(v, RatFn(f * h, g * h))


# w-valuations

def test_check_w_examples():
    T = Torus(3, Fraction(5, 2))
    for w in product(range(-2, 3), repeat=3):
        assert check_w_valuation(W(T, *w), 0)
    n, d0 = 3, 2
    B = Potential(n, fermat(n, n + 1 + d0), SHIFTED, 1)
    assert check_w_valuation(W(B, -1, -1, -1, -1), d0)
    assert not check_w_valuation(W(weyl(3), 1, 1, 1, 1), 0)


def test_classical_examples():
    T = Torus(3, 2)
    assert not is_classical(W(T, 1, 0, 0), 0)
    B = Potential(2, fermat(2, 5), QUOTIENT)
    assert is_classical(W(B, 1, 1, 1), 0)
    # lowering w below the achieved slack makes it fail the criterion
    with pytest.raises(ValueError):
        is_classical(W(T, 1, 0, 0), -1)
    assert is_classical(W(T, 1, 0, 0), 1)


def test_graded_bracket_torus():
    T = Torus(3, 3)
    v = W(T, 1, 1, 1)
    g = T.generators()
    assert graded_bracket(v, 0, g) == bracket(T, g)
    # with kappa = (0,1,0) the bracket sits one step higher
    T = Torus(3, 3, (0, 1, 0))
    v = W(T, 1, 1, 1)
    assert graded_bracket(v, 0, g).is_zero()
    assert check_w_valuation(v, -1)
    assert graded_bracket(v, -1, g) == bracket(T, g)


def test_graded_bracket_recovers_homogeneous_potential():
    n, d0 = 2, 2
    om = fermat(n, n + 1 + d0)
    B = Potential(n, om, SHIFTED, 1)
    v = W(B, -1, -1, -1)
    g = B.generators()
    for i in range(1, n + 2):
        args = g[:i - 1] + g[i:]
        assert graded_bracket(v, d0, args) == poly_partial(om, i) * (-1) ** (n + 1 - i)


def test_graded_bracket_drops_high_part():
    v = W(A4, 1, 1, 1, 1)
    g = A4.generators()
    # bracket value 3 exceeds 3 - w for w = 1
    assert graded_bracket(v, 1, g[:3]).is_zero()
    with pytest.raises(ValueError):
        graded_bracket(v, 0, [g[0] + g[1] * g[2], g[1], g[2]])


def test_graded_bracket_is_alternating_and_leibniz():
    n, d0 = 2, 1
    B = Potential(n, fermat(n, n + 1 + d0), SHIFTED, 2)
    v = W(B, -1, -1, -1)
    assert check_w_valuation(v, d0)
    rng = random.Random(9)
    for _ in range(20):
        a, b, c = (leading_form(v, random_poly(rng, 3, 2, (-3, 3), 3) or Poly.const(1, 3))
                   for _ in range(3))
        if not (a and b and c):
            continue
        assert (graded_bracket(v, d0, [a, b]) + graded_bracket(v, d0, [b, a])).is_zero()
        lhs = graded_bracket(v, d0, [a * b, c])
        rhs = a * graded_bracket(v, d0, [b, c]) + b * graded_bracket(v, d0, [a, c])
        assert lhs == rhs


def test_faithful():
    assert torus_faithful_check(W(Torus(3, 2), 1, 0, 0))
    assert not torus_faithful_check(W(Torus(2, 2), 2, 4))
    assert not torus_faithful_check(W(Torus(3, 2), 0, 0, 0))
    with pytest.raises(TypeError):
        torus_faithful_check(W(A4, 1, 0, 0, 0))


# point valuations

def test_point_valuations():
    B = Potential(3, fermat(3, 4), SHIFTED, 1)
    assert point_valuation_classify(B, (1, 0, 0, 0)) == WEYL
    B2 = Potential(2, fermat(2, 3), SHIFTED, 2)
    assert point_valuation_classify(B2, (1, 1, 0)) == WEYL
    with pytest.raises(ValueError, match="hypersurface"):
        point_valuation_classify(B, (1, 1, 0, 0))
    P = Potential(2, parse_poly("t1*t2*t3"), QUOTIENT)
    with pytest.raises(SingularPointError):
        point_valuation_classify(P, (0, 0, 5))
    with pytest.raises(TypeError):
        point_valuation_classify(A4, (0, 0, 0, 0))


def test_classical_label_unreachable_at_smooth_points():
    # smooth points of Omega = xi are exactly those with a nonzero partial
    assert CLASSICAL != WEYL
    P = Potential(2, parse_poly("t1*t2*t3"), QUOTIENT)
    assert point_valuation_classify(P, (0, 1, 1)) == WEYL


# Adams valuations

def test_adams_d0_zero():
    n = 3
    P = Potential(n, fermat(n, n + 1), QUOTIENT)
    plus, minus = adams_valuations(P)
    assert check_w_valuation(plus, 0) and check_w_valuation(minus, 0)
    S = Potential(n, fermat(n, n + 1), SHIFTED, 1)
    (c,) = adams_valuations(S)
    assert check_w_valuation(c, 0)


@pytest.mark.parametrize("d0", [1, 2, 3])
def test_adams_shifted(d0):
    n = 2
    S = Potential(n, fermat(n, n + 1 + d0), SHIFTED, 1)
    (c,) = adams_valuations(S)
    assert check_w_valuation(c, d0)
    assert not check_w_valuation(c, 0)
    assert adams_w(c) == d0
    plus = W(S, 1, 1, 1)
    assert adams_w(plus) == -d0
    assert is_homogeneous(c, fermat(n, n + 1 + d0))
