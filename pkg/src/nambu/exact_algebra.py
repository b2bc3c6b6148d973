"""Exact arithmetic: sparse (Laurent) polynomials, rational functions,
polynomial determinants and integer-vector utilities.

Coefficients are rationals.  Integral coefficients are stored as ``int`` and
the rest as :class:`fractions.Fraction`, which keeps the common case fast
without ever leaving exact arithmetic.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence, Union

Rational = Union[int, Fraction]
Exponent = tuple


def _norm(c) -> Rational:
    """Return c as an int when it is integral, otherwise as a Fraction."""
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class Poly:
    """Sparse multivariate polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples of length ``nvars`` to nonzero
    coefficients.  With ``laurent=True`` negative exponents are allowed.
    Instances are immutable and hashable.
    """

    __slots__ = ("nvars", "laurent", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Rational] | None = None,
                 laurent: bool = False):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
                if not laurent and any(x < 0 for x in e):
                    raise ValueError("negative exponent in a non-Laurent polynomial")
                c = _norm(c)
                if c:
                    clean[e] = c
        self.nvars = nvars
        self.laurent = bool(laurent)
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, nvars, terms, laurent):
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.nvars = nvars
        p.laurent = laurent
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c, nvars: int, laurent: bool = False) -> "Poly":
        return cls(nvars, {(0,) * nvars: c}, laurent)

    @classmethod
    def var(cls, i: int, nvars: int, laurent: bool = False) -> "Poly":
        """The variable with 1-based index ``i``."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} out of range 1..{nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1}, laurent)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1, laurent: bool | None = None) -> "Poly":
        exps = tuple(exps)
        if laurent is None:
            laurent = any(x < 0 for x in exps)
        return cls(len(exps), {exps: coeff}, laurent)

    @classmethod
    def gens(cls, nvars: int, laurent: bool = False) -> list:
        return [cls.var(i, nvars, laurent) for i in range(1, nvars + 1)]

    # basic queries

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.nvars in self._terms)

    def constant_term(self) -> Rational:
        return self._terms.get((0,) * self.nvars, 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coeff(self, exps: Sequence[int]) -> Rational:
        return self._terms.get(tuple(exps), 0)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            return -1
        return min(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def has_negative_exponents(self) -> bool:
        return any(x < 0 for e in self._terms for x in e)

    def variables(self) -> set:
        """1-based indices of the variables that actually occur."""
        return {i + 1 for e in self._terms for i, x in enumerate(e) if x}

    def as_laurent(self) -> "Poly":
        if self.laurent:
            return self
        return Poly._raw(self.nvars, self._terms, True)

    def as_polynomial(self) -> "Poly":
        """Drop the Laurent flag; fails if a negative exponent is present."""
        if not self.laurent:
            return self
        if self.has_negative_exponents():
            raise ValueError("polynomial has negative exponents")
        return Poly._raw(self.nvars, self._terms, False)

    # ring operations

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise ValueError(f"dimension mismatch: {self.nvars} vs {other.nvars} variables")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.nvars, self.laurent)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out, self.laurent or other.laurent)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self._terms.items()}, self.laurent)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _norm(other)
            if not other:
                return Poly._raw(self.nvars, {}, self.laurent)
            return Poly._raw(self.nvars, {e: _norm(c * other) for e, c in self._terms.items()},
                             self.laurent)
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            (e, c), = self._terms.items()
            return Poly._raw(self.nvars, {tuple(x * k for x in e): _norm(Fraction(c) ** k)}, True)
        result = Poly.const(1, self.nvars, self.laurent)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .expression import format_poly
        return f"Poly({format_poly(self)!r}, nvars={self.nvars})"

    # evaluation and calculus

    def partial(self, i: int) -> "Poly":
        return poly_partial(self, i)

    def evaluate(self, point: Sequence) -> Rational:
        """Value at a rational point (nonzero coordinates needed for negative powers)."""
        if len(point) != self.nvars:
            raise ValueError("point has the wrong dimension")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            v = Fraction(c)
            for x, k in zip(pt, e):
                if k:
                    v *= x ** k
            total += v
        return _norm(total)

    def mul_monomial(self, exps: Sequence[int], coeff=1) -> "Poly":
        coeff = _norm(coeff)
        lau = self.laurent or any(x < 0 for x in exps)
        return Poly._raw(self.nvars,
                         {tuple(a + b for a, b in zip(e, exps)): _norm(c * coeff)
                          for e, c in self._terms.items()} if coeff else {},
                         lau)

    def monomial_content(self) -> tuple:
        """Componentwise minimum exponent over all terms."""
        if not self._terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self._terms))


def poly_mul(f: Poly, g: Poly) -> Poly:
    """Exact product of two polynomials over the same variables."""
    f._check(g)
    if len(f._terms) > len(g._terms):
        f, g = g, f
    out: dict = {}
    gi = list(g._terms.items())
    for e1, c1 in f._terms.items():
        for e2, c2 in gi:
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    clean = {e: _norm(c) for e, c in out.items() if c}
    return Poly._raw(f.nvars, clean, f.laurent or g.laurent)


def poly_partial(f: Poly, i: int) -> Poly:
    """Formal partial derivative in the variable with 1-based index ``i``."""
    if not 1 <= i <= f.nvars:
        raise IndexError(f"variable index {i} out of range 1..{f.nvars}")
    k = i - 1
    out = {}
    for e, c in f._terms.items():
        if e[k]:
            ne = list(e)
            ne[k] -= 1
            out[tuple(ne)] = _norm(c * e[k])
    return Poly._raw(f.nvars, out, f.laurent)


def poly_div_exact(f: Poly, g: Poly) -> Poly:
    """Quotient f/g when g divides f exactly; raises ValueError otherwise.

    Plain division by leading terms under lex order.  Only used where the
    quotient is known to exist (fraction-free elimination).
    """
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_monomial():
        (ge, gc), = g._terms.items()
        out = {}
        for e, c in f._terms.items():
            ne = tuple(a - b for a, b in zip(e, ge))
            out[ne] = _norm(Fraction(c) / gc)
        q = Poly._raw(f.nvars, out, True)
        if not (f.laurent or g.laurent):
            if q.has_negative_exponents():
                _fail_div()
            q = Poly._raw(f.nvars, out, False)
        return q
    lead_g = max(g._terms)
    lc_g = g._terms[lead_g]
    rem = dict(f._terms)
    quot: dict = {}
    while rem:
        lead = max(rem)
        if any(a < b for a, b in zip(lead, lead_g)) and not (f.laurent or g.laurent):
            _fail_div()
        shift = tuple(a - b for a, b in zip(lead, lead_g))
        c = Fraction(rem[lead]) / lc_g
        quot[shift] = _norm(c)
        for e, gcf in g._terms.items():
            ne = tuple(a + b for a, b in zip(e, shift))
            v = rem.get(ne, 0) - c * gcf
            if v:
                rem[ne] = _norm(v)
            else:
                rem.pop(ne, None)
        if len(quot) > 10 * (len(f._terms) + 1) * (len(g._terms) + 1):
            _fail_div()
    return Poly._raw(f.nvars, quot, f.laurent or g.laurent)


def _fail_div():
    raise ValueError("polynomial division is not exact")


# rational functions

class RatFn:
    """Fraction ``num/den`` of two polynomials; no canonical form is kept.

    Equality is semantic, decided by cross-multiplication (see rf_equal).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.const(1, num.nvars)
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @classmethod
    def lift(cls, f) -> "RatFn":
        if isinstance(f, RatFn):
            return f
        if isinstance(f, Poly):
            return cls(f)
        raise TypeError(f"cannot treat {type(f).__name__} as a rational function")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other.den == self.den:
            return RatFn(self.num + other.num, self.den)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k >= 0:
            return RatFn(self.num ** k, self.den ** k)
        if self.num.is_zero():
            raise ZeroDivisionError("negative power of zero")
        return RatFn(self.den ** (-k), self.num ** (-k))

    def _coerce(self, other) -> "RatFn":
        if isinstance(other, RatFn):
            self.num._check(other.num)
            return other
        if isinstance(other, Poly):
            self.num._check(other)
            return RatFn(other)
        if isinstance(other, (int, Fraction)):
            return RatFn(Poly.const(other, self.nvars))
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def __eq__(self, other):
        if isinstance(other, (RatFn, Poly, int, Fraction)):
            return rf_equal(self, self._coerce(other))
        return NotImplemented

    __hash__ = None

    def partial(self, i: int) -> "RatFn":
        dn = poly_partial(self.num, i)
        dd = poly_partial(self.den, i)
        if dd.is_zero():
            return RatFn(dn, self.den)
        return RatFn(dn * self.den - self.num * dd, self.den * self.den)

    def as_poly(self) -> Poly | None:
        """The polynomial (possibly Laurent) this function equals, if its
        denominator is a monomial; ``None`` otherwise."""
        if self.den.is_monomial():
            return poly_div_exact(self.num.as_laurent(), self.den.as_laurent())
        return None

    def simplify_monomial(self) -> "RatFn":
        """Cancel the common monomial factor and make the denominator's
        leading coefficient 1.  Cheap, and enough for printing witnesses."""
        cn = self.num.monomial_content() if self.num else self.den.monomial_content()
        cd = self.den.monomial_content()
        common = tuple(min(a, b) for a, b in zip(cn, cd))
        neg = tuple(-x for x in common)
        num = self.num.mul_monomial(neg)
        den = self.den.mul_monomial(neg)
        lc = den._terms[max(den._terms)]
        num = num * _norm(Fraction(1) / lc)
        den = den * _norm(Fraction(1) / lc)
        if not num.has_negative_exponents():
            num = num.as_polynomial()
        if not den.has_negative_exponents():
            den = den.as_polynomial()
        return RatFn(num, den)

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return _norm(Fraction(self.num.evaluate(point)) / d)

    def __repr__(self):
        from .expression import format_expr
        return f"RatFn({format_expr(self)!r})"


def rf_equal(p: RatFn, q: RatFn) -> bool:
    """True iff p.num*q.den == q.num*p.den."""
    p, q = RatFn.lift(p), RatFn.lift(q)
    return p.num * q.den == q.num * p.den


def as_ratfn(f) -> RatFn:
    return RatFn.lift(f)


def poly_substitute(f: Poly, images: Sequence) -> RatFn:
    """Compose f with images (one Poly or RatFn per variable)."""
    if len(images) != f.nvars:
        raise ValueError(f"arity mismatch: {len(images)} images for {f.nvars} variables")
    imgs = [RatFn.lift(g) for g in images]
    if not imgs:
        raise ValueError("no images")
    m = imgs[0].nvars
    for g in imgs:
        if g.nvars != m:
            raise ValueError("images live over different variable sets")
    if f.is_zero():
        return RatFn(Poly(m, {}))
    lo = f.monomial_content()
    hi = tuple(max(col) for col in zip(*f._terms))
    for k, g in enumerate(imgs):
        if lo[k] < 0 and g.is_zero():
            raise ZeroDivisionError("negative power of a zero image")
    # Common denominator: variable k contributes den_k^a * num_k^b with
    # a = max(hi_k, 0), b = max(-lo_k, 0).  Then img_k^e times that factor
    # is num_k^(e+b) * den_k^(a-e) for every exponent e in range.
    shifts = [(max(hi[k], 0), max(-lo[k], 0)) for k in range(f.nvars)]
    cache: dict = {}
    den_total = Poly.const(1, m)
    for k, (a, b) in enumerate(shifts):
        den_total = den_total * _pw(imgs[k].den, a, cache, ("d", k)) * _pw(imgs[k].num, b, cache, ("n", k))
    num_total = Poly(m, {})
    for e, c in f._terms.items():
        term = Poly.const(c, m)
        for k, ek in enumerate(e):
            a, b = shifts[k]
            term = term * _pw(imgs[k].num, ek + b, cache, ("n", k)) * _pw(imgs[k].den, a - ek, cache, ("d", k))
        num_total = num_total + term
    return RatFn(num_total, den_total)


def _pw(p: Poly, e: int, cache: dict, tag) -> Poly:
    key = (tag, e)
    if key not in cache:
        cache[key] = p ** e
    return cache[key]


# determinants

def matrix_det(M: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square matrix of polynomials.

    Cofactor expansion for size <= 4, fraction-free (Bareiss) elimination
    above that.  Both give the same polynomial.
    """
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n <= 4:
        return det_cofactor(M)
    return det_bareiss(M)


def det_cofactor(M) -> Poly:
    n = len(M)
    nv = M[0][0].nvars
    memo: dict = {}

    def minor(row, cols):
        # determinant of rows row..n-1 restricted to the column tuple cols
        if row == n:
            return Poly.const(1, nv)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = Poly(nv, {})
        for pos, c in enumerate(cols):
            entry = M[row][c]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if sub.is_zero():
                continue
            term = entry * sub
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))


def det_bareiss(M) -> Poly:
    n = len(M)
    nv = M[0][0].nvars
    A = [list(row) for row in M]
    sign = 1
    prev = Poly.const(1, nv)
    for k in range(n - 1):
        if A[k][k].is_zero():
            for r in range(k + 1, n):
                if not A[r][k].is_zero():
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return Poly(nv, {})
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = poly_div_exact(v, prev) if not prev == 1 else v
            A[i][k] = Poly(nv, {})
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return d if sign == 1 else -d


def det_leibniz(M) -> Poly:
    """Determinant by the permutation expansion; a slow reference."""
    n = len(M)
    nv = M[0][0].nvars
    total = Poly(nv, {})
    for perm in permutations(range(n)):
        term = Poly.const(permutation_sign(perm), nv)
        for i, j in enumerate(perm):
            term = term * M[i][j]
            if term.is_zero():
                break
        total = total + term
    return total


def ratfn_det(M: Sequence[Sequence]) -> RatFn:
    """Determinant of a square matrix of rational functions.

    Each row is scaled by the product of its distinct denominators, so the
    core computation is a polynomial determinant.
    """
    rows = []
    dens = []
    for row in M:
        row = [RatFn.lift(x) for x in row]
        distinct = []
        for x in row:
            if not any(x.den == d for d in distinct):
                distinct.append(x.den)
        D = distinct[0]
        for d in distinct[1:]:
            D = D * d
        prow = []
        for x in row:
            # x * D as a polynomial: num * (D / den)
            prow.append(x.num * poly_div_exact(D, x.den) if x.den != D else x.num)
        rows.append(prow)
        dens.append(D)
    num = matrix_det(rows)
    den = dens[0]
    for d in dens[1:]:
        den = den * d
    return RatFn(num, den)


def permutation_sign(perm: Sequence[int]) -> int:
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# integer vectors and matrices

def gcd_vector(v: Iterable[int]) -> int:
    """gcd of the absolute values; the zero vector has gcd 0."""
    g = 0
    for x in v:
        g = math.gcd(g, int(x))
    return g


def int_det(A: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (Bareiss)."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    M = [list(map(int, r)) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def int_matmul(A, B):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(len(B)))
                       for j in range(len(B[0]))) for i in range(len(A)))


def int_vecmat(v, A):
    return tuple(sum(v[k] * A[k][j] for k in range(len(A))) for j in range(len(A[0])))


def _ext_gcd(a: int, b: int):
    """(g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def complete_unimodular(a: Sequence[int]) -> tuple:
    """Integer matrix with first row ``a`` and determinant +-1.

    Column operations reduce ``a`` to (1, 0, ..., 0); the accumulated
    unimodular matrix V satisfies a.V = e1, so V^-1 has first row a.
    """
    a = [int(x) for x in a]
    n = len(a)
    if n == 0:
        raise ValueError("empty vector")
    if gcd_vector(a) != 1:
        raise ValueError(f"vector {tuple(a)} is not primitive")
    # Vinv accumulates the inverses of the column operations in reverse
    Vinv = [[int(i == j) for j in range(n)] for i in range(n)]
    v = list(a)
    for i in range(n - 1, 0, -1):
        p, q = v[i - 1], v[i]
        if q == 0:
            continue
        g, x, y = _ext_gcd(p, q)
        # (p, q) . [[x, -q/g], [y, p/g]] = (g, 0); the inverse is
        # [[p/g, q/g], [-y, x]] and multiplies Vinv from the left
        v[i - 1], v[i] = g, 0
        r0 = Vinv[i - 1]
        r1 = Vinv[i]
        Vinv[i - 1] = [p // g * s + q // g * t for s, t in zip(r0, r1)]
        Vinv[i] = [-y * s + x * t for s, t in zip(r0, r1)]
    if v[0] == -1:
        Vinv[0] = [-s for s in Vinv[0]]
    M = tuple(tuple(r) for r in Vinv)
    assert M[0] == tuple(a), (M, a)
    assert abs(int_det(M)) == 1
    return M


def int_inverse_unimodular(A) -> tuple:
    """Inverse of an integer matrix with determinant +-1 (adjugate formula)."""
    n = len(A)
    d = int_det(A)
    if abs(d) != 1:
        raise ValueError("matrix is not unimodular")
    inv = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(map(list, A)) if k != i]
            inv[j][i] = (-1) ** (i + j) * (int_det(minor) if minor else 1) * d
    return tuple(tuple(r) for r in inv)


# monomial maps

def monomial_images(A: Sequence[Sequence[int]], coeffs: Sequence | None = None) -> list:
    """Laurent monomials y_i = c_i * prod_j x_j^{A[i][j]} as RatFns."""
    n = len(A)
    coeffs = coeffs or [1] * n
    out = []
    for row, c in zip(A, coeffs):
        num = [max(x, 0) for x in row]
        den = [max(-x, 0) for x in row]
        out.append(RatFn(Poly(n, {tuple(num): c}), Poly(n, {tuple(den): 1})))
    return out


# random sampling for property checks

def random_poly(rng: random.Random, nvars: int, max_degree: int = 2,
                coeff_range: tuple = (-3, 3), max_terms: int | None = None,
                laurent: bool = False) -> Poly:
    """Random polynomial of total degree <= max_degree with integer
    coefficients drawn from coeff_range (inclusive)."""
    monos = _monomials_up_to(nvars, max_degree)
    if max_terms is None:
        max_terms = len(monos)
    k = rng.randint(1, min(max_terms, len(monos)))
    chosen = rng.sample(monos, k)
    lo, hi = coeff_range
    terms = {}
    for e in chosen:
        c = rng.randint(lo, hi)
        if laurent:
            e = tuple(x - rng.randint(0, 1) for x in e)
        if c:
            terms[e] = terms.get(e, 0) + c
    return Poly(nvars, terms, laurent)


def _monomials_up_to(nvars: int, deg: int) -> list:
    out = []

    def rec(prefix, left):
        if len(prefix) == nvars:
            out.append(tuple(prefix))
            return
        for k in range(left + 1):
            rec(prefix + [k], left - k)

    rec([], deg)
    return out


def monomials_up_to(nvars: int, deg: int) -> list:
    """All exponent tuples of total degree <= deg."""
    return _monomials_up_to(nvars, deg)
