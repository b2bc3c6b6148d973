"""Weight valuations, induced filtrations and graded brackets.

Values live in Z^m ordered by total sum first and lexicographically on
ties; infinity sits above every value.  A weight valuation assigns a value
to each generator; a monomial gets the weighted sum of its exponents and a
polynomial the minimum over its terms.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .exact_algebra import Poly, RatFn, gcd_vector, poly_partial
from .nambu_bracket import SHIFTED, QUOTIENT, FULL, Potential, Torus, bracket


@functools.total_ordering
class OrderedValue:
    """Element of Z^m under the sum-then-lex order."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        if isinstance(coords, int):
            coords = (coords,)
        coords = tuple(int(c) for c in coords)
        if not coords:
            raise ValueError("an ordered value needs at least one coordinate")
        self.coords = coords

    @property
    def m(self) -> int:
        return len(self.coords)

    def _key(self):
        return (sum(self.coords), self.coords)

    def _other(self, other):
        if isinstance(other, int):
            other = OrderedValue((other,) + (0,) * (self.m - 1)) if self.m > 1 else OrderedValue(other)
        if isinstance(other, OrderedValue) and other.m != self.m:
            raise ValueError("values of different ranks")
        return other

    def __eq__(self, other):
        if other is INFINITY:
            return False
        other = self._other(other)
        if not isinstance(other, OrderedValue):
            return NotImplemented
        return self.coords == other.coords

    def __lt__(self, other):
        if other is INFINITY:
            return True
        other = self._other(other)
        if not isinstance(other, OrderedValue):
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other):
        if other is INFINITY:
            return INFINITY
        other = self._other(other)
        return OrderedValue(tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return OrderedValue(tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._other(other)
        if other is INFINITY:
            raise ArithmeticError("cannot subtract infinity")
        return self + (-other)

    def scale(self, k: int) -> "OrderedValue":
        return OrderedValue(tuple(k * a for a in self.coords))

    def __repr__(self):
        return str(self.coords[0]) if self.m == 1 else f"OrderedValue({self.coords})"

    def to_json(self):
        return self.coords[0] if self.m == 1 else list(self.coords)


class _Infinity:
    """Greater than every ordered value; absorbs addition."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "Infinity"

    def to_json(self):
        return "Infinity"


INFINITY = _Infinity()
Value = Union[OrderedValue, _Infinity]


def as_value(x) -> OrderedValue:
    if isinstance(x, OrderedValue):
        return x
    return OrderedValue(x)


@dataclass(frozen=True)
class WeightValuation:
    """Valuation induced by weights on the generators of an algebra.

    For a torus the inverses get the negated weights automatically, since the
    value of a Laurent monomial is the weighted sum of its exponents.
    """
    algebra: object
    weights: tuple

    def __post_init__(self):
        ws = tuple(as_value(w) for w in self.weights)
        if len(ws) != self.algebra.nvars:
            raise ValueError(f"need {self.algebra.nvars} weights, got {len(ws)}")
        if len({w.m for w in ws}) != 1:
            raise ValueError("weights of mixed rank")
        object.__setattr__(self, "weights", ws)

    @property
    def m(self) -> int:
        return self.weights[0].m

    def monomial_value(self, e) -> OrderedValue:
        m = self.m
        acc = [0] * m
        for k, w in zip(e, self.weights):
            if k:
                for j in range(m):
                    acc[j] += k * w.coords[j]
        return OrderedValue(tuple(acc))

    @property
    def rho(self) -> OrderedValue:
        """Minimum generator weight."""
        return min(self.weights)


def value_of(v: WeightValuation, f: Poly) -> Value:
    """Minimum weighted degree over the terms of f; infinity for 0."""
    if f.nvars != v.algebra.nvars:
        raise ValueError("variable mismatch between valuation and polynomial")
    if f.is_zero():
        return INFINITY
    return min(v.monomial_value(e) for e, _ in f.items())


def rf_value(v: WeightValuation, p: RatFn) -> Value:
    p = RatFn.lift(p)
    num = value_of(v, p.num)
    if num is INFINITY:
        return INFINITY
    return num - value_of(v, p.den)


def _value(v, f) -> Value:
    return rf_value(v, f) if isinstance(f, RatFn) else value_of(v, f)


def leading_form(v: WeightValuation, f: Poly) -> Poly:
    """Sum of the terms of f of minimal weight."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no leading form")
    low = value_of(v, f)
    return Poly(f.nvars, {e: c for e, c in f.items() if v.monomial_value(e) == low}, f.laurent)


def homogeneous_component(v: WeightValuation, f: Poly, value: OrderedValue) -> Poly:
    return Poly(f.nvars, {e: c for e, c in f.items() if v.monomial_value(e) == value}, f.laurent)


def is_homogeneous(v: WeightValuation, f: Poly) -> bool:
    return len({v.monomial_value(e) for e, _ in f.items()}) <= 1


def generator_subsets(alg):
    """n-subsets of the generators (and inverses for a torus) used by the
    w-valuation criterion."""
    gens = alg.generators_with_inverses() if isinstance(alg, Torus) else alg.generators()
    return combinations(gens, alg.n)


def _slacks(v: WeightValuation, w):
    """Yield (bracket value, sum of argument values - w) per generator subset."""
    w = as_value(w) if not isinstance(w, OrderedValue) else w
    for args in generator_subsets(v.algebra):
        b = bracket(v.algebra, list(args))
        total = None
        for a in args:
            val = value_of(v, a)
            total = val if total is None else total + val
        yield value_of(v, b), total - w


def check_w_valuation(v: WeightValuation, w) -> bool:
    """True iff nu({g1..gn}) >= sum nu(g_s) - w on every generator n-subset."""
    return all(b >= bound for b, bound in _slacks(v, w))


def is_classical(v: WeightValuation, w) -> bool:
    """Strict inequality on every generator n-subset.

    Requires ``check_w_valuation(v, w)``.
    """
    pairs = list(_slacks(v, w))
    if not all(b >= bound for b, bound in pairs):
        raise ValueError(f"not a {w}-valuation, so classicality is undefined")
    return all(b > bound for b, bound in pairs)


def graded_bracket(v: WeightValuation, w, args: Sequence[Poly]) -> Poly:
    """Component of {args} in weight sum(nu(args)) - w.

    Arguments must be homogeneous for v (e.g. leading forms).
    """
    w = as_value(w)
    total = None
    for a in args:
        if a.is_zero():
            return Poly(v.algebra.nvars, {}, isinstance(v.algebra, Torus))
        if not is_homogeneous(v, a):
            raise ValueError("graded bracket arguments must be homogeneous")
        val = value_of(v, a)
        total = val if total is None else total + val
    b = bracket(v.algebra, list(args))
    return homogeneous_component(v, b, total - w)


def torus_faithful_check(v: WeightValuation) -> bool:
    """Faithful 0-valuation test on a torus with scalar weights: the weights
    have gcd 1, the criterion holds at w = 0 and the graded bracket of the
    generators survives."""
    alg = v.algebra
    if not isinstance(alg, Torus):
        raise TypeError("torus_faithful_check needs a torus")
    if v.m != 1:
        raise ValueError("scalar weights expected")
    if gcd_vector(w.coords[0] for w in v.weights) != 1:
        return False
    if not check_w_valuation(v, 0):
        return False
    return not graded_bracket(v, 0, alg.generators()).is_zero()


# point valuations

CLASSICAL = "Classical"
WEYL = "Weyl"


class SingularPointError(ValueError):
    pass


def point_valuation_classify(alg: Potential, point: Sequence) -> str:
    """Classify the valuation of the maximal ideal at a point of Omega = xi.

    The valuation is classical iff every bracket of generators vanishes at
    the point, i.e. every partial of Omega does.  A point where all partials
    vanish is singular and is rejected, so smooth points always give Weyl.
    """
    if not isinstance(alg, Potential) or alg.kind not in (QUOTIENT, SHIFTED):
        raise TypeError("point valuations are defined on P_Omega or P_{Omega - xi}")
    if len(point) != alg.nvars:
        raise ValueError(f"point needs {alg.nvars} coordinates")
    pt = [Fraction(x) for x in point]
    if alg.omega.evaluate(pt) != alg.xi:
        raise ValueError("point does not lie on the hypersurface Omega = xi")
    partials = [poly_partial(alg.omega, i).evaluate(pt) for i in range(1, alg.nvars + 1)]
    if all(p == 0 for p in partials):
        raise SingularPointError("singular point: every partial of Omega vanishes")
    return CLASSICAL if all(p == 0 for p in partials) else WEYL


# Adams valuations

def adams_valuations(alg) -> tuple:
    """nu^Id (weights +1) and nu^-Id (weights -1); for P_{Omega - xi} with
    xi != 0 only nu^c (weights -1) is returned."""
    k = alg.nvars
    plus = WeightValuation(alg, (1,) * k)
    minus = WeightValuation(alg, (-1,) * k)
    if isinstance(alg, Potential) and alg.kind == SHIFTED and alg.xi != 0:
        return (minus,)
    return (plus, minus)


def adams_w(v: WeightValuation):
    """Least w for which weights all +1 or all -1 give a w-valuation on a
    homogeneous potential (-d0 and d0 respectively)."""
    alg = v.algebra
    if not isinstance(alg, Potential) or not alg.omega.is_homogeneous():
        raise ValueError("needs a homogeneous potential")
    sign = v.weights[0].coords[0]
    return -sign * alg.d0
