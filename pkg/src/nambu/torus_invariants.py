"""Invariants, normal forms and embedding questions for Nambu-Poisson tori
and the fields N_q, N(k), N_Weyl and Q(P_Omega).

Every decision here comes from a proved case; anything else is reported as
Unknown or Uncovered rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .exact_algebra import (Poly, complete_unimodular, gcd_vector, int_det)
from .grading_valuation import WeightValuation, check_w_valuation
from .nambu_bracket import FULL, QUOTIENT, SHIFTED, Potential, Torus, torus_transport_identity
from .pde_decider import _mono, verify_pde_solution
from .singularity import is_isolated_singularity


# field descriptors

@dataclass(frozen=True)
class QSkew:
    """N_q: fraction field of T(q, 0), {x1..xn} = q x1..xn."""
    q: Fraction
    n: int = 3

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q == 0:
            raise ValueError("q must be nonzero")
        _check_n(self.n)

    def torus(self) -> Torus:
        return Torus(self.n, self.q)


@dataclass(frozen=True)
class NK:
    """N(k): fraction field of T(1, (k, 0, .., 0))."""
    k: int
    n: int = 3

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise ValueError("N(k) needs an integer k >= 1")
        _check_n(self.n)

    def torus(self) -> Torus:
        return Torus(self.n, 1, (self.k,) + (0,) * (self.n - 1))


@dataclass(frozen=True)
class WeylField:
    """N_Weyl, with {x1..xn} = 1; isomorphic to N(1)."""
    n: int = 3

    def __post_init__(self):
        _check_n(self.n)


@dataclass(frozen=True)
class PotentialField:
    """Q(B) for a potential algebra B."""
    alg: Potential

    @property
    def n(self) -> int:
        return self.alg.n


FieldDescriptor = Union[QSkew, NK, WeylField, PotentialField]


def _check_n(n):
    if n < 2:
        raise ValueError("arity n must be at least 2")


def field_bracket(f: FieldDescriptor) -> Poly:
    """The bracket {t1..tn} of a torus-type field as a Laurent polynomial in
    t1..tn; this is the side a (or b) of the matching PDE."""
    n = f.n
    if isinstance(f, QSkew):
        return Poly(n, {(1,) * n: f.q}, laurent=True)
    if isinstance(f, NK):
        return Poly(n, {(1 + f.k,) + (1,) * (n - 1): 1}, laurent=True)
    if isinstance(f, WeylField):
        return Poly.const(1, n, laurent=True)
    raise ValueError("no single-monomial bracket for potential fields")


def embedding_pde_sides(source: FieldDescriptor, target: FieldDescriptor):
    """(a, b) with a the target bracket and b the source bracket, so that a
    solution of J(y) a(t) = b(y) is an embedding source -> target."""
    from .expression import laurent_to_ratfn
    return laurent_to_ratfn(field_bracket(target)), laurent_to_ratfn(field_bracket(source))


# invariants

def kappa_invariant(kappa) -> int:
    return gcd_vector(kappa)


def varrho_invariant(f: FieldDescriptor) -> frozenset:
    if not isinstance(f, QSkew):
        raise ValueError("the varrho invariant is computed for q-skew fields only")
    return frozenset({f.q, -f.q})


@dataclass
class NormalForm:
    """T(q, kappa) = T(q * det A, (g, 0, .., 0)) through y_i = x^(A_i).

    ``q`` is the reported normalized parameter (always 1); moving from
    ``scalar`` to 1 rescales y1 by a g-th root of ``scalar``, which need not
    be rational.
    """
    q: Fraction
    kappa: tuple
    witness: tuple
    scalar: Fraction
    verified: bool


def torus_normal_form(q, kappa) -> NormalForm:
    kappa = tuple(int(k) for k in kappa)
    if not any(kappa):
        raise ValueError("kappa = 0 is its own normal form (the q-skew family)")
    n = len(kappa)
    g = gcd_vector(kappa)
    A = complete_unimodular([k // g for k in kappa])
    T = Torus(n, q, kappa)
    normalized = (g,) + (0,) * (n - 1)
    ok = torus_transport_identity(T, A) and _normal_form_holds(T, A, g)
    return NormalForm(Fraction(1), normalized, A, Fraction(q) * int_det(A), ok)


def _normal_form_holds(T: Torus, A, g) -> bool:
    """{y1..yn} = q det(A) y1..yn y1^g for y_i = x^(A_i)."""
    n = T.n
    ys = [Poly(n, {tuple(r): 1}, laurent=True) for r in A]
    from .nambu_bracket import bracket
    lhs = bracket(T, ys)
    prod = Poly.const(1, n, laurent=True)
    for y in ys:
        prod = prod * y
    rhs = prod * ys[0] ** g * (T.q * int_det(A))
    return lhs == rhs


def torus_iso_decide(t1: Torus, t2: Torus) -> bool:
    g1, g2 = gcd_vector(t1.kappa), gcd_vector(t2.kappa)
    if t1.n != t2.n or g1 != g2:
        return False
    if g1 > 0:
        return True
    return t1.q == t2.q or t1.q == -t2.q


# embeddings

@dataclass
class Yes:
    witness: list
    citation: str = ""
    status = "yes"


@dataclass
class No:
    citation: str
    valuations: tuple = ()
    status = "no"


@dataclass
class Unknown:
    reason: str = ""
    status = "unknown"


def torus_embed_decide(source: FieldDescriptor, target: FieldDescriptor):
    if isinstance(source, WeylField):
        source = NK(1, source.n)
    if isinstance(target, WeylField):
        target = NK(1, target.n)
    if not isinstance(source, (QSkew, NK)) or not isinstance(target, (QSkew, NK)):
        raise ValueError("embedding decisions cover the q-skew and N(k) families")
    if source.n != target.n:
        raise ValueError("fields of different dimensions")
    n = source.n
    a, b = embedding_pde_sides(source, target)
    if isinstance(source, QSkew) and isinstance(target, QSkew):
        d = source.q / target.q
        if d.denominator != 1:
            return No("Thm 4.16")
        y = [_mono([int(d) if j == 0 else 0 for j in range(n)])] + \
            [_mono([int(i == j) for j in range(n)]) for i in range(1, n)]
        return _yes(a, b, y, "Thm 4.16")
    if isinstance(source, NK) and isinstance(target, NK):
        k, k2 = source.k, target.k
        if k2 % k == 0:
            d = k2 // k
            # y1 = d x1^d, y2 = x2^(d^(k-1)): det = d^k matches y1^k / x1^(dk)
            rows = [[0] * n for _ in range(n)]
            rows[0][0] = d
            rows[1][1] = d ** (k - 1)
            for i in range(2, n):
                rows[i][i] = 1
            y = [_mono(rows[0], d)] + [_mono(r) for r in rows[1:]]
            return _yes(a, b, y, "Lemma 4.7(6)")
        if k2 < k:
            return No("Cor 4.9")
        return Unknown("not settled between k | k' and k' < k")
    if isinstance(source, QSkew):
        # N(k) carries the (-1)-valuation nu(x1) = 1, others 0
        T = target.torus()
        v = WeightValuation(T, (1,) + (0,) * (n - 1))
        assert check_w_valuation(v, -1)
        cite = "Cor 5.9(2)" if target.k == 1 else "Cor 5.9(1)"
        return No(cite, (v,))
    return Unknown("no separating invariant for N(k) into N_q")


def _yes(a, b, y, citation):
    if not verify_pde_solution(a, b, y):
        raise AssertionError("embedding witness failed verification")
    return Yes(y, citation)


# Gamma caps

@dataclass
class WholeField:
    status = "ok"
    name = "WholeField"


@dataclass
class Subalgebra:
    name_: str
    status = "ok"

    @property
    def name(self) -> str:
        return f"Subalgebra{{{self.name_}}}"


@dataclass
class GroundField:
    witness: WeightValuation
    status = "ok"
    name = "GroundField"


@dataclass
class Uncovered:
    reason: str = ""
    status = "uncovered"
    name = "Uncovered"


GammaCap = Union[WholeField, Subalgebra, GroundField, Uncovered]


def _potential_ok(alg: Potential) -> bool:
    om = alg.omega
    return om.is_homogeneous() and om.total_degree() >= 2 and is_isolated_singularity(om)[0]


def gamma_cap_classify(f: FieldDescriptor, w: int):
    """The cap ^w Gamma_0 of a field, from the cases proved for it."""
    w = int(w)
    if isinstance(f, WeylField):
        f = NK(1, f.n)
    if isinstance(f, NK):
        if 1 <= w <= f.k - 1:
            return Subalgebra("k[x1]")
        if w >= f.k:
            v = WeightValuation(f.torus(), (-1,) + (0,) * (f.n - 1))
            if not check_w_valuation(v, w):
                raise AssertionError("ground-field witness is not a w-valuation")
            return GroundField(v)
        return Uncovered("w <= 0 is not classified for N(k)")
    if isinstance(f, PotentialField):
        alg = f.alg
        if not _potential_ok(alg):
            return Uncovered("potential is not a homogeneous isolated singularity")
        d0 = alg.d0
        if alg.kind == SHIFTED and alg.xi != 0 and d0 >= 1:
            if w <= 0:
                return WholeField()
            if w <= d0 - 1:
                return Subalgebra("B")
            v = WeightValuation(alg, (-1,) * alg.nvars)
            if not check_w_valuation(v, w):
                raise AssertionError("ground-field witness is not a w-valuation")
            return GroundField(v)
        if d0 >= 2 and 1 <= w <= d0 - 1:
            return Subalgebra("B")
        return Uncovered("no proved case for these parameters")
    return Uncovered("no proved case for this field")


def depth_width_lookup(f: FieldDescriptor):
    """(depth, width) for the proved families, else Uncovered."""
    if isinstance(f, QSkew):
        return (0, 1)
    if isinstance(f, PotentialField):
        alg = f.alg
        if _potential_ok(alg) and alg.d0 == 0:
            if alg.kind == QUOTIENT:
                return (0, 1)
            if alg.kind == SHIFTED and alg.xi == 1:
                return (1, 1)
    return Uncovered("depth and width are not known for this field")
