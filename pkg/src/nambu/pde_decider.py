"""Separable Jacobian PDEs  d(y1..yn)/d(t1..tn) = b(y) / a(t).

A solution is the same thing as a Nambu-Poisson embedding of the field with
bracket {t1..tn} = b into the field with bracket {t1..tn} = a, sending t_i
to y_i.  The decider matches (a, b) against a fixed catalogue of shapes with
known answers and says Unknown for everything else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exact_algebra import (Poly, RatFn, _norm, complete_unimodular, gcd_vector,
                            int_det, int_inverse_unimodular, int_matmul, poly_substitute,
                            rf_equal)
from .nambu_bracket import jacobian

MONOMIAL = "MonomialScaled"
MONO_TIMES_POLY = "MonomialTimesPoly"
GENERAL = "General"


@dataclass(frozen=True)
class PdeSide:
    """One side of the equation, classified by shape.

    ``kind`` is MonomialScaled (``c * t^exps``), MonomialTimesPoly
    (``t1..tn * p(u)`` with ``u = t^u_exps`` primitive and deg p >= 1) or
    General.
    """
    value: RatFn
    kind: str
    c: Optional[Fraction] = None
    exps: Optional[tuple] = None
    p: Optional[dict] = None          # power of u -> coefficient
    u_exps: Optional[tuple] = None

    @property
    def n(self) -> int:
        return self.value.nvars

    @property
    def degree(self) -> int:
        return max(self.p) if self.p else 0


def _laurent(f: RatFn) -> Optional[Poly]:
    f = RatFn.lift(f)
    return f.as_poly() if f.den.is_monomial() else None


def _collinear(L: Poly):
    """Write a Laurent polynomial as p(t^d) with d primitive and p a
    polynomial of positive degree.  Returns (coeffs, d) or None."""
    nz = [e for e, _ in L.items() if any(e)]
    if not nz:
        return None
    v = nz[0]
    g = gcd_vector(v)
    d = [x // g for x in v]
    k = next(i for i, x in enumerate(d) if x)
    coeffs = {}
    for e, c in L.items():
        j = e[k] // d[k] if e[k] % d[k] == 0 else None
        if j is None or tuple(j * x for x in d) != tuple(e):
            return None
        coeffs[j] = c
    js = list(coeffs)
    if min(js) < 0:
        if max(js) > 0:
            return None
        d = [-x for x in d]
        coeffs = {-j: c for j, c in coeffs.items()}
    return coeffs, tuple(d)


def classify_side(f) -> PdeSide:
    if isinstance(f, PdeSide):
        return f
    f = RatFn.lift(f)
    if f.is_zero():
        raise ValueError("PDE sides must be nonzero")
    L = _laurent(f)
    if L is not None and L.is_monomial():
        (e, c), = L.items()
        return PdeSide(f, MONOMIAL, c=Fraction(c), exps=tuple(e))
    if L is not None:
        shifted = L.mul_monomial(tuple(-1 for _ in range(L.nvars)))
        col = _collinear(shifted)
        if col is not None:
            coeffs, d = col
            return PdeSide(f, MONO_TIMES_POLY, p=coeffs, u_exps=d)
    return PdeSide(f, GENERAL)


def _check_arity(a: PdeSide, b: PdeSide, y=None):
    if a.n != b.n:
        raise ValueError(f"arity mismatch: a has {a.n} variables, b has {b.n}")
    if y is not None and len(y) != a.n:
        raise ValueError(f"arity mismatch: need {a.n} functions, got {len(y)}")


def verify_pde_solution(a, b, y: Sequence) -> bool:
    """True iff Jacobian(y) * a(t) = b(y) exactly and Jacobian(y) != 0."""
    a, b = classify_side(a), classify_side(b)
    _check_arity(a, b, y)
    y = [RatFn.lift(v) for v in y]
    if any(v.nvars != a.n for v in y):
        raise ValueError("solution components must be functions of the same variables")
    J = jacobian(y)
    if J.is_zero():
        return False
    num = poly_substitute(b.value.num, y)
    den = poly_substitute(b.value.den, y)
    if den.is_zero():
        return False
    return rf_equal(J * a.value, num / den)


# verdicts

@dataclass
class Solvable:
    witness: list
    citation: str = ""
    a: Optional[PdeSide] = field(default=None, repr=False)
    b: Optional[PdeSide] = field(default=None, repr=False)
    status = "solvable"


@dataclass
class Unsolvable:
    criterion: str
    valuations: tuple = ()
    status = "unsolvable"

    @property
    def citation(self) -> str:
        return self.criterion


@dataclass
class Unknown:
    reason: str = "outside the catalogue of decided shapes"
    status = "unknown"


PdeVerdict = Union[Solvable, Unsolvable, Unknown]


def _t_prod(n: int) -> tuple:
    return (1,) * n


def _power_witness(n: int, d: int) -> list:
    """t1 -> t1^d, other variables fixed."""
    out = []
    for i in range(n):
        e = [0] * n
        if i == 0:
            e[0] = d
        else:
            e[i] = 1
        out.append(_mono(e))
    return out


def _mono(e, c=1) -> RatFn:
    n = len(e)
    num = Poly(n, {tuple(max(x, 0) for x in e): _norm(c)})
    den = Poly(n, {tuple(max(-x, 0) for x in e): 1})
    return RatFn(num, den)


def monomial_witness(p: Sequence[int], q: Sequence[int], alpha, beta) -> Optional[list]:
    """Monomial solution of J(y) * alpha t^(1+q) = beta y^(1+p).

    Needs gcd(p) = g > 0 dividing gcd(q) = h > 0.  Writing p = g p^, q = h q^
    and d = h/g, take A = U^-1 D V with U, V unimodular with first rows p^,
    q^ and D = diag(d, m, 1, ..); then p.A = q, and m, the sign of det A and
    the coefficients c_i = R^lambda_i are chosen so that
    det(A) alpha / beta = prod c_i^p_i = R^g.
    """
    n = len(p)
    g, h = gcd_vector(p), gcd_vector(q)
    if n < 2 or g == 0 or h == 0 or h % g:
        return None
    d = h // g
    ph = [x // g for x in p]
    qh = [x // h for x in q]
    U = complete_unimodular(ph)
    V = [list(r) for r in complete_unimodular(qh)]
    Ui = int_inverse_unimodular(U)
    ratio = Fraction(alpha) / Fraction(beta)
    N, Dn = ratio.numerator, ratio.denominator
    # d*m*|N|/Dn must be R^g: complete d*|N|*Dn^(g-1) to a g-th power
    x = d * abs(N) * Dn ** (g - 1)
    m = _power_completion(x, g)
    R = Fraction(_int_root(m * x, g), Dn)
    s = int_det(Ui) * int_det(V)
    if s * (1 if N > 0 else -1) < 0:
        V[1] = [-x for x in V[1]]
    D = [[0] * n for _ in range(n)]
    for i in range(n):
        D[i][i] = 1
    D[0][0] = d
    D[1][1] = m
    A = int_matmul(int_matmul(Ui, D), V)
    lam = [Ui[i][0] for i in range(n)]
    return [_mono(A[i], R ** lam[i]) for i in range(n)]


def _power_completion(x: int, g: int) -> int:
    """Least m >= 1 with m*x a perfect g-th power (trial division)."""
    m = 1
    p = 2
    while p * p <= x:
        k = 0
        while x % p == 0:
            x //= p
            k += 1
        if k % g:
            m *= p ** (g - k % g)
        p += 1
    if x > 1 and g > 1:
        m *= x ** (g - 1)
    return m


def _int_root(x: int, g: int) -> int:
    r = round(x ** (1.0 / g)) if x < 2 ** 1000 else int(x ** (1.0 / g))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** g == x:
            return c
    lo, hi = 0, 1 << (x.bit_length() // g + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** g < x:
            lo = mid + 1
        else:
            hi = mid
    if lo ** g != x:
        raise ArithmeticError(f"{x} is not a perfect {g}-th power")
    return lo


def _solvable(a, b, y, citation) -> PdeVerdict:
    if not verify_pde_solution(a, b, y):
        raise AssertionError("constructed witness failed verification")
    return Solvable(y, citation, a, b)


def _witness_valuations(n: int, e: int) -> tuple:
    return ((1,) * n,) if e == 1 else ((-1,) * n,)


def pde_decide(a, b) -> PdeVerdict:
    """Decide the PDE against the catalogue, in order; Unknown otherwise."""
    a, b = classify_side(a), classify_side(b)
    _check_arity(a, b)
    n = a.n
    one = _t_prod(n)
    b_qskew = b.kind == MONOMIAL and b.exps == one
    a_qskew = a.kind == MONOMIAL and a.exps == one

    # (i) both q-skew: embedding N_beta -> N_alpha
    if b_qskew and a_qskew:
        ratio = b.c / a.c
        if ratio.denominator == 1:
            return _solvable(a, b, _power_witness(n, int(ratio)), "Thm 4.16")
        return Unsolvable("Cor 7.4(1)")

    # (ii) a constant: the target is the Weyl field
    if b_qskew and a.kind == MONOMIAL and not any(a.exps):
        return Unsolvable("Cor 7.4(2)")

    # (iii) both monomials t^(1+p), t^(1+q)
    if a.kind == MONOMIAL and b.kind == MONOMIAL:
        p = [x - 1 for x in b.exps]
        q = [x - 1 for x in a.exps]
        g, h = gcd_vector(p), gcd_vector(q)
        if g > h > 0:
            return Unsolvable("Cor 7.4(3)")
        if g > 0 and h > 0 and h % g == 0:
            y = monomial_witness(p, q, a.c, b.c)
            if y is not None:
                return _solvable(a, b, y, "Lemma 4.7(2,6)")
        if g == 0 and h > 0:
            # N_beta into a field with a (-1)-valuation
            return Unsolvable("Cor 5.9(1)", (_neg_one_weights(q),))

    # (iv) b = t1..tn p(u) with deg p = h >= 2, a = t1..tn p0(u') with
    # u' a primitive monomial and 0 < deg p0 < h
    bp = _as_mono_times_poly(b)
    ap = _as_mono_times_poly(a)
    if bp is not None and ap is not None:
        hb, ha = max(bp[0]), max(ap[0])
        if hb >= 2 and 0 < ha < hb:
            return Unsolvable("Thm 7.6")

    # (v) b = beta t1..tn, a = t1..tn Phi^(+-1) with Phi(0) = 0
    if b_qskew:
        e = _phi_exponent(a)
        if e is not None:
            return Unsolvable("Cor 7.8", _witness_valuations(n, e))

    return Unknown()


def _as_mono_times_poly(s: PdeSide):
    if s.kind == MONO_TIMES_POLY:
        return s.p, s.u_exps
    if s.kind == MONOMIAL:
        L = Poly(s.n, {tuple(x - 1 for x in s.exps): _norm(s.c)}, laurent=True)
        return _collinear(L)
    return None


def _phi_exponent(a: PdeSide) -> Optional[int]:
    """e when a = t1..tn * Phi^e with Phi a nonconstant polynomial with zero
    constant term and e in {1, -1}."""
    n = a.n
    f = a.value
    prod = Poly(n, {_t_prod(n): 1})
    # e = 1: a / (t1..tn) is a polynomial
    for cand, e in ((RatFn(f.num, f.den * prod), 1), (RatFn(f.den * prod, f.num), -1)):
        phi = _laurent(cand)
        if phi is None or phi.has_negative_exponents():
            continue
        if not phi.is_constant() and phi.constant_term() == 0:
            return e
    return None


def _neg_one_weights(q: Sequence[int]) -> tuple:
    """Integer weights v with v.q = gcd(q); on the field with bracket
    t^(1+q) they give a (-1)-valuation."""
    n = len(q)
    h = gcd_vector(q)
    U = complete_unimodular([x // h for x in q])
    Ui = int_inverse_unimodular(U)
    return tuple(Ui[i][0] for i in range(n))


def pde_compose(fact1: Solvable, fact2: Solvable) -> Solvable:
    """From solutions for (a, b) and (b, c), build one for (a, c).

    fact1 gives t_i -> w1_i from the b-field into the a-field, fact2 gives
    t_i -> w2_i from the c-field into the b-field; the composite sends t_i
    to w2_i(w1).
    """
    for f in (fact1, fact2):
        if not isinstance(f, Solvable) or f.a is None or f.b is None:
            raise ValueError("composition needs solvable facts with their sides")
    if not rf_equal(fact1.b.value, fact2.a.value):
        raise ValueError("middle sides do not match")
    w1 = fact1.witness
    y = []
    for comp in fact2.witness:
        comp = RatFn.lift(comp)
        y.append(poly_substitute(comp.num, w1) / poly_substitute(comp.den, w1))
    y = [v.simplify_monomial() for v in y]
    if not verify_pde_solution(fact1.a, fact2.b, y):
        raise AssertionError("composed witness failed verification")
    return Solvable(y, "Lemma 7.3", fact1.a, fact2.b)
