import random
from fractions import Fraction
from itertools import product

import pytest
import sympy

from conftest import from_sympy, to_sympy
from nambu.exact_algebra import Poly, random_poly
from nambu.expression import parse_poly
from nambu.nambu_bracket import fermat
from nambu.singularity import (INFINITE, ORDERS, buchberger, is_groebner_basis,
                               is_isolated_singularity, order_key, partials_ideal,
                               quotient_dimension, reduce)

SYMPY_ORDER = {"lex": "lex", "deglex": "grlex", "degrevlex": "grevlex"}


def P(text, n=3):
    return parse_poly(text, n)


def _monic(p: Poly, order):
    key = order_key(order)
    lead = max((e for e, _ in p.items()), key=key)
    return p * (Fraction(1) / Fraction(p.coeff(lead)))


def _sympy_basis(gens, order):
    n = gens[0].nvars
    xs = sympy.symbols(f"t1:{n + 1}")
    G = sympy.groebner([to_sympy(g)[0] for g in gens], *xs, order=SYMPY_ORDER[order])
    return {_monic(from_sympy(g, xs), order) for g in G.exprs}


def test_examples():
    gb = buchberger([P("t1", 2), P("t2", 2)])
    assert set(gb.gens) == {P("t1", 2), P("t2", 2)}
    gb = buchberger([P("t1^2 - t2", 2), P("t2^2", 2)], verify=True)
    assert reduce(P("t2^2", 2), gb).is_zero()
    assert all(reduce(g, gb).is_zero() for g in gb.gens)
    unit = buchberger([Poly.const(1, 2)])
    assert unit.is_unit() and quotient_dimension(unit) == 0


def test_quotient_dimension_examples():
    assert quotient_dimension(buchberger(Poly.gens(4))) == 1
    assert quotient_dimension(buchberger(partials_ideal(fermat(2, 3)))) == 8
    assert quotient_dimension(buchberger([P("5*t1^4", 2)])) is INFINITE


@pytest.mark.parametrize("order", ORDERS)
@pytest.mark.parametrize("seed", range(6))
def test_matches_sympy(order, seed):
    rng = random.Random(seed)
    gens = [random_poly(rng, 3, 3, (-3, 3), 3) for _ in range(3)]
    gens = [g for g in gens if g] or [P("t1")]
    gb = buchberger(gens, order, verify=True)
    assert set(gb.gens) == _sympy_basis(gens, order)
    assert is_groebner_basis(gb)


STRUCTURED = [
    ["t1 + t2 + t3", "t1*t2 + t2*t3 + t1*t3", "t1*t2*t3 - 1"],
    ["t1^2 - t2*t3", "t2^2 - t1*t3", "t3^2 - t1*t2"],
    ["t2 - t1^2", "t3 - t1^3"],
    ["t1^3 - 2*t1*t2", "t1^2*t2 - 2*t2^2 + t1"],
    ["4*t1^3 + t2*t3", "3*t2^2 + t1*t3", "3*t3^2 + t1*t2"],
    ["t1*t2 - t3^2", "t1^2*t3 - t2^3 + 1/2"],
]


@pytest.mark.parametrize("order", ORDERS)
@pytest.mark.parametrize("idx", range(len(STRUCTURED)))
def test_structured_matches_sympy(order, idx):
    gens = [P(g) for g in STRUCTURED[idx]]
    gb = buchberger(gens, order, verify=True)
    assert set(gb.gens) == _sympy_basis(gens, order)


@pytest.mark.parametrize("n, d, dim", [(2, 3, 8), (2, 4, 27), (3, 3, 16), (3, 4, 81), (2, 5, 64)])
def test_fermat_milnor(n, d, dim):
    assert is_isolated_singularity(fermat(n, d)) == (True, dim)


def _staircase_oracle(omega, bound):
    """Standard monomials below an exponent box, counted by linear algebra:
    dim of the quotient of the bounded monomial space by the ideal part,
    checked through sympy's own reduction."""
    n = omega.nvars
    xs = sympy.symbols(f"t1:{n + 1}")
    G = sympy.groebner([sympy.diff(to_sympy(omega)[0], x) for x in xs], *xs, order="grevlex")
    count = 0
    for e in product(range(bound), repeat=n):
        m = sympy.Mul(*[x ** k for x, k in zip(xs, e)])
        if G.reduce(m)[1] == m:
            count += 1
    return count


def test_staircase_against_enumeration():
    om = P("t1^3 + t2^3 + t3^3")
    assert is_isolated_singularity(om).dimension == _staircase_oracle(om, 3) == 8
    om = P("t1^4 + t1*t2^2 + t2^3 + t3^2")
    rep = is_isolated_singularity(om)
    assert rep.isolated
    assert rep.dimension == _staircase_oracle(om, 6)


def test_dimension_is_order_independent():
    om = P("t1^4 + t2^3 + t3^3 + t1*t2*t3")
    dims = {is_isolated_singularity(om, o).dimension for o in ORDERS}
    assert len(dims) == 1 and dims.pop() != INFINITE


def test_non_isolated():
    assert is_isolated_singularity(P("2*t1*t2*t3")) == (False, INFINITE)
    assert is_isolated_singularity(P("t1^2*t2", 2)) == (False, INFINITE)


def test_low_degree():
    rep = is_isolated_singularity(P("t3"))
    assert rep == (True, 0) and rep.low_degree
    assert not is_isolated_singularity(fermat(2, 3)).low_degree


def test_errors():
    with pytest.raises(ValueError):
        is_isolated_singularity(Poly.const(4, 3))
    with pytest.raises(ValueError):
        buchberger([])
    with pytest.raises(ValueError):
        order_key("revlex")
    with pytest.raises(ValueError):
        buchberger([parse_poly("x1^-1", 1, laurent=True)])
