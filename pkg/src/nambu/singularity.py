"""Groebner bases over Q and the isolated-singularity test.

A potential has an isolated singularity when its partial derivatives
generate an ideal of finite codimension.  That codimension is the number of
standard monomials of a Groebner basis, and it is finite exactly when every
variable has a pure power among the leading monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .exact_algebra import Poly, _norm, poly_partial

ORDERS = ("degrevlex", "deglex", "lex")


def order_key(order: str):
    """Sort key on exponent tuples; larger key means larger monomial."""
    if order == "lex":
        return lambda e: e
    if order == "deglex":
        return lambda e: (sum(e), e)
    if order == "degrevlex":
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    raise ValueError(f"unknown monomial order {order!r}")


class _Infinite:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Infinite"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("Infinite")


INFINITE = _Infinite()


# internal dict arithmetic; polys are {exponent: Fraction}

def _lead(p: dict, key):
    return max(p, key=key)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub_scaled(p: dict, q: dict, c, shift):
    """p - c * x^shift * q, in place."""
    for e, v in q.items():
        ne = tuple(a + b for a, b in zip(e, shift))
        nv = p.get(ne, 0) - c * v
        if nv:
            p[ne] = nv
        else:
            p.pop(ne, None)


def _monic(p: dict, key) -> dict:
    lc = p[_lead(p, key)]
    return {e: v / lc for e, v in p.items()}


def _reduce(f: dict, basis: list, key) -> dict:
    """Full normal form of f by basis (each element monic, with cached lead)."""
    f = dict(f)
    out = {}
    while f:
        lt = _lead(f, key)
        c = f[lt]
        for g, lg in basis:
            if _divides(lg, lt):
                _sub_scaled(f, g, c, tuple(a - b for a, b in zip(lt, lg)))
                break
        else:
            out[lt] = c
            del f[lt]
    return out


def _spoly(f, lf, g, lg):
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    s = {}
    _sub_scaled(s, f, -1, tuple(a - b for a, b in zip(lcm, lf)))
    _sub_scaled(s, g, 1, tuple(a - b for a, b in zip(lcm, lg)))
    return s


def _to_dict(p: Poly) -> dict:
    return {e: Fraction(c) for e, c in p.items()}


def _to_poly(d: dict, nvars: int) -> Poly:
    return Poly(nvars, {e: _norm(c) for e, c in d.items()})


@dataclass(frozen=True)
class GroebnerBasis:
    order: str
    gens: tuple
    nvars: int

    def leading_monomials(self) -> list:
        key = order_key(self.order)
        return [max((e for e, _ in g.items()), key=key) for g in self.gens]

    def is_unit(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.gens)


def buchberger(gens: Sequence[Poly], order: str = "degrevlex", verify: bool = False) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs with coprime leading monomials are skipped, as are pairs covered
    by the chain criterion.  ``verify`` re-checks the result afterwards.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    nv = gens[0].nvars
    for g in gens:
        if g.nvars != nv:
            raise ValueError("generators over different variable sets")
        if g.has_negative_exponents():
            raise ValueError("Groebner bases need polynomial (non-Laurent) input")
    key = order_key(order)
    basis = []  # list of (dict, lead)
    for g in gens:
        d = _reduce(_to_dict(g), basis, key) if basis else _to_dict(g)
        if d:
            d = _monic(d, key)
            basis.append((d, _lead(d, key)))
    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}
    while pairs:
        i, j = min(pairs, key=lambda ij: (
            key(tuple(max(a, b) for a, b in zip(basis[ij[0]][1], basis[ij[1]][1]))), ij))
        pairs.discard((i, j))
        (f, lf), (g, lg) = basis[i], basis[j]
        if all(a == 0 or b == 0 for a, b in zip(lf, lg)):
            continue
        lcm = tuple(max(a, b) for a, b in zip(lf, lg))
        if _chain_skip(i, j, lcm, basis, pairs):
            continue
        r = _reduce(_spoly(f, lf, g, lg), basis, key)
        if r:
            r = _monic(r, key)
            basis.append((r, _lead(r, key)))
            k = len(basis) - 1
            pairs |= {(a, k) for a in range(k)}
    out = _interreduce(basis, key)
    gb = GroebnerBasis(order, tuple(_to_poly(d, nv) for d in out), nv)
    if verify:
        assert is_groebner_basis(gb), "S-polynomial failed to reduce to 0"
        assert all(reduce(g, gb).is_zero() for g in gens), "input generator not in ideal"
    return gb


def _chain_skip(i, j, lcm, basis, pairs) -> bool:
    for k, (_, lk) in enumerate(basis):
        if k in (i, j) or not _divides(lk, lcm):
            continue
        if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
            return True
    return False


def _interreduce(basis, key) -> list:
    # drop elements whose lead is divisible by another lead, then reduce tails
    keep = []
    for idx, (g, lg) in enumerate(basis):
        redundant = False
        for jdx, (_, lh) in enumerate(basis):
            if jdx == idx or not _divides(lh, lg):
                continue
            if lh != lg or jdx < idx:
                redundant = True
                break
        if not redundant:
            keep.append((g, lg))
    out = []
    for idx, (g, lg) in enumerate(keep):
        others = [b for k, b in enumerate(keep) if k != idx]
        r = _reduce(g, others, key)
        out.append(_monic(r, key))
    out.sort(key=lambda d: key(_lead(d, key)))
    return out


def reduce(f: Poly, gb: GroebnerBasis) -> Poly:
    """Normal form of f modulo the basis; zero iff f lies in the ideal."""
    if f.nvars != gb.nvars:
        raise ValueError("variable mismatch")
    key = order_key(gb.order)
    basis = [(d, _lead(d, key)) for d in (_to_dict(g) for g in gb.gens)]
    return _to_poly(_reduce(_to_dict(f), basis, key), gb.nvars)


def is_groebner_basis(gb: GroebnerBasis) -> bool:
    """Every S-polynomial reduces to zero."""
    key = order_key(gb.order)
    basis = [(d, _lead(d, key)) for d in (_to_dict(g) for g in gb.gens)]
    for j in range(len(basis)):
        for i in range(j):
            (f, lf), (g, lg) = basis[i], basis[j]
            if _reduce(_spoly(f, lf, g, lg), basis, key):
                return False
    return True


def quotient_dimension(gb: GroebnerBasis):
    """Number of standard monomials, or INFINITE for an unbounded staircase."""
    leads = gb.leading_monomials()
    nv = gb.nvars
    bounds = []
    for k in range(nv):
        pure = [lm[k] for lm in leads if all(x == 0 for i, x in enumerate(lm) if i != k)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    count = 0
    for e in product(*(range(b) for b in bounds)):
        if not any(_divides(lm, e) for lm in leads):
            count += 1
    return count


class SingularityReport(tuple):
    """(isolated, dimension) with a ``low_degree`` flag for degree < 2."""

    def __new__(cls, isolated: bool, dimension, low_degree: bool = False):
        self = super().__new__(cls, (isolated, dimension))
        self.low_degree = low_degree
        return self

    @property
    def isolated(self) -> bool:
        return self[0]

    @property
    def dimension(self):
        return self[1]


def partials_ideal(omega: Poly) -> list:
    return [poly_partial(omega, i) for i in range(1, omega.nvars + 1)]


def is_isolated_singularity(omega: Poly, order: str = "degrevlex") -> SingularityReport:
    """True with the codimension when the partials ideal has finite codimension.

    Degree-1 potentials give the unit ideal, reported as (True, 0) with
    ``low_degree`` set.
    """
    if omega.is_constant():
        raise ValueError("constant potential has no singularity structure")
    if omega.has_negative_exponents():
        raise ValueError("potential must be a polynomial")
    omega = omega.as_polynomial()
    parts = [p for p in partials_ideal(omega) if not p.is_zero()]
    gb = buchberger(parts, order)
    dim = quotient_dimension(gb)
    return SingularityReport(dim is not INFINITE, dim, omega.total_degree() < 2)
