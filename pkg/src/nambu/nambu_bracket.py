"""n-ary Nambu-Poisson brackets.

A potential algebra on ``k[t1..t_{n+1}]`` has the bracket

    {f1, ..., fn} = det( grad f1 ; ... ; grad fn ; grad Omega ),

and a torus ``T(q, kappa)`` on ``k[x1^+-1..xn^+-1]`` has

    {f1, ..., fn} = Jac(f1..fn) * q * x1^(1+kappa1) ... xn^(1+kappan).

Quotients ``P_Omega`` and ``P_{Omega - xi}`` are handled through polynomial
representatives: the formula acts on representatives and nothing is reduced
modulo ``Omega - xi``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .exact_algebra import (Poly, RatFn, _norm, matrix_det, poly_partial,
                            poly_substitute, random_poly, ratfn_det, rf_equal)

FULL = "A"          # A_Omega, the polynomial ring
QUOTIENT = "P"      # P_Omega
SHIFTED = "P-xi"    # P_{Omega - xi}
KINDS = (FULL, QUOTIENT, SHIFTED)


@dataclass(frozen=True)
class Potential:
    """Potential algebra on n+1 variables t1..t_{n+1}."""
    n: int
    omega: Poly
    kind: str = FULL
    xi: Fraction = Fraction(0)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("arity n must be at least 2")
        if self.omega.nvars != self.n + 1:
            raise ValueError(f"potential must have {self.n + 1} variables, has {self.omega.nvars}")
        if self.omega.laurent and self.omega.has_negative_exponents():
            raise ValueError("potential must be a polynomial")
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "xi", Fraction(self.xi))
        if self.kind != SHIFTED and self.xi != 0:
            raise ValueError("xi is only meaningful for the shifted quotient")

    @property
    def nvars(self) -> int:
        return self.n + 1

    @property
    def prefix(self) -> str:
        return "t"

    def generators(self) -> list:
        return Poly.gens(self.n + 1)

    @property
    def d0(self) -> int:
        """deg Omega - (n+1) under the Adams grading deg t_i = 1."""
        return self.omega.total_degree() - (self.n + 1)


@dataclass(frozen=True)
class Torus:
    """Nambu-Poisson torus T(q, kappa) on x1..xn."""
    n: int
    q: Fraction
    kappa: tuple = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("arity n must be at least 2")
        q = Fraction(self.q)
        if q == 0:
            raise ValueError("q must be nonzero")
        object.__setattr__(self, "q", q)
        kappa = tuple(self.kappa) if self.kappa is not None else (0,) * self.n
        if len(kappa) != self.n:
            raise ValueError(f"kappa must have length {self.n}")
        object.__setattr__(self, "kappa", tuple(int(k) for k in kappa))

    @property
    def nvars(self) -> int:
        return self.n

    @property
    def prefix(self) -> str:
        return "x"

    def generators(self) -> list:
        return Poly.gens(self.n, laurent=True)

    def generators_with_inverses(self) -> list:
        gens = self.generators()
        return gens + [g ** -1 for g in gens]

    def bracket_factor(self) -> Poly:
        """q * x1^(1+kappa1) ... xn^(1+kappan)."""
        return Poly(self.n, {tuple(1 + k for k in self.kappa): _norm(self.q)}, laurent=True)


AlgebraDescriptor = Union[Potential, Torus]


def weyl(n: int) -> Potential:
    """The potential Omega = t_{n+1}, giving {t1..tn} = 1."""
    return Potential(n, Poly.var(n + 1, n + 1))


def fermat(n: int, degree: int, coeff=1) -> Poly:
    """sum_s t_s^degree in n+1 variables."""
    terms = {}
    for i in range(n + 1):
        e = [0] * (n + 1)
        e[i] = degree
        terms[tuple(e)] = coeff
    return Poly(n + 1, terms)


def _lift(args):
    return [RatFn.lift(a) if isinstance(a, RatFn) else a for a in args]


def bracket(alg: AlgebraDescriptor, args: Sequence) -> Union[Poly, RatFn]:
    """Evaluate {args[0], ..., args[n-1]}.

    Returns a Poly when every argument is a Poly, otherwise a RatFn.
    """
    if len(args) != alg.n:
        raise ValueError(f"arity mismatch: the bracket takes {alg.n} arguments, got {len(args)}")
    for a in args:
        if not isinstance(a, (Poly, RatFn)):
            raise TypeError(f"bracket argument of type {type(a).__name__}")
        if a.nvars != alg.nvars:
            raise ValueError(f"argument has {a.nvars} variables, algebra has {alg.nvars}")
    poly_only = all(isinstance(a, Poly) for a in args)
    nv = alg.nvars
    if isinstance(alg, Potential):
        grad_omega = [poly_partial(alg.omega, i) for i in range(1, nv + 1)]
        if poly_only:
            rows = [[poly_partial(a, i) for i in range(1, nv + 1)] for a in args]
            rows.append(grad_omega)
            return matrix_det(rows)
        rows = [[RatFn.lift(a).partial(i) for i in range(1, nv + 1)] for a in args]
        rows.append([RatFn(g) for g in grad_omega])
        return ratfn_det(rows)
    # torus
    if poly_only:
        jac = matrix_det([[poly_partial(a.as_laurent(), i) for i in range(1, nv + 1)] for a in args])
        return jac * alg.bracket_factor()
    jac = jacobian(args)
    return jac * RatFn(*_split_laurent(alg.bracket_factor()))


def _split_laurent(p: Poly):
    lo = p.monomial_content()
    shift = tuple(max(-x, 0) for x in lo)
    return p.mul_monomial(shift).as_polynomial(), Poly(p.nvars, {shift: 1})


def jacobian(ys: Sequence) -> RatFn:
    """Jacobian determinant d(y1..yn)/d(t1..tn) of n rational functions."""
    ys = [RatFn.lift(y) for y in ys]
    n = len(ys)
    if any(y.nvars != n for y in ys):
        raise ValueError("the Jacobian needs n functions of n variables")
    return ratfn_det([[y.partial(i) for i in range(1, n + 1)] for y in ys])


def is_zero(f) -> bool:
    return f.is_zero()


def _eq(f, g) -> bool:
    if isinstance(f, Poly) and isinstance(g, Poly):
        return f == g
    return rf_equal(RatFn.lift(f), RatFn.lift(g))


# axiom verifiers

@dataclass
class AxiomReport:
    axiom: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


def verify_alternating(alg: AlgebraDescriptor, samples) -> AxiomReport:
    """Every transposition of the arguments flips the sign of the bracket."""
    rep = AxiomReport("alternating")
    for args in samples:
        args = list(args)
        base = bracket(alg, args)
        for i, j in combinations(range(len(args)), 2):
            swapped = list(args)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            s = bracket(alg, swapped) + base
            rep.checked += 1
            if not s.is_zero():
                rep.failures.append((tuple(args), (i, j)))
    return rep


def verify_fundamental_identity(alg: AlgebraDescriptor, samples) -> AxiomReport:
    """{{u1..un}, v1..v_{n-1}} = sum_s {u1, .., {u_s, v1..v_{n-1}}, .., un}."""
    n = alg.n
    rep = AxiomReport("fundamental identity")
    for sample in samples:
        sample = list(sample)
        if len(sample) != 2 * n - 1:
            raise ValueError(f"fundamental identity samples need {2 * n - 1} entries")
        u, v = sample[:n], sample[n:]
        lhs = bracket(alg, [bracket(alg, u)] + v)
        rhs = None
        for s in range(n):
            inner = bracket(alg, [u[s]] + v)
            w = list(u)
            w[s] = inner
            term = bracket(alg, w)
            rhs = term if rhs is None else rhs + term
        rep.checked += 1
        if not (lhs - rhs).is_zero():
            rep.failures.append(tuple(sample))
    return rep


def verify_leibniz(alg: AlgebraDescriptor, samples) -> AxiomReport:
    """Samples are (slot, a, b, rest) with ``rest`` the other n-1 arguments.

    Checks {.., ab, ..} = a{.., b, ..} + b{.., a, ..} in the given slot.
    """
    rep = AxiomReport("Leibniz rule")
    for slot, a, b, rest in samples:
        rest = list(rest)
        if len(rest) != alg.n - 1:
            raise ValueError(f"Leibniz samples need {alg.n - 1} remaining arguments")

        def at(x):
            return bracket(alg, rest[:slot] + [x] + rest[slot:])

        diff = at(a * b) - a * at(b) - b * at(a)
        rep.checked += 1
        if not diff.is_zero():
            rep.failures.append((slot, a, b, tuple(rest)))
    return rep


def random_tuples(alg: AlgebraDescriptor, count: int, size: int, seed=0,
                  max_degree: int = 2, coeff_range=(-3, 3), max_terms: int | None = None) -> list:
    rng = random.Random(seed)
    laurent = isinstance(alg, Torus)
    return [tuple(random_poly(rng, alg.nvars, max_degree, coeff_range, max_terms, laurent)
                  for _ in range(size)) for _ in range(count)]


def random_leibniz_samples(alg: AlgebraDescriptor, count: int, seed=0, max_degree: int = 2,
                           coeff_range=(-3, 3), max_terms: int | None = None) -> list:
    rng = random.Random(seed)
    laurent = isinstance(alg, Torus)

    def rp():
        return random_poly(rng, alg.nvars, max_degree, coeff_range, max_terms, laurent)

    return [(rng.randrange(alg.n), rp(), rp(), tuple(rp() for _ in range(alg.n - 1)))
            for _ in range(count)]


# center and sign law

def generator_bracket(alg: Potential, i: int) -> Poly:
    """{t1, .., t_i omitted, .., t_{n+1}} for 1-based i."""
    gens = alg.generators()
    return bracket(alg, gens[:i - 1] + gens[i:])


def sign_law_holds(alg: Potential) -> bool:
    """{t1..t_i omitted..t_{n+1}} = (-1)^(n+1-i) Omega_{t_i} for every i."""
    for i in range(1, alg.n + 2):
        expected = poly_partial(alg.omega, i) * (-1) ** (alg.n + 1 - i)
        if generator_bracket(alg, i) != expected:
            return False
    return True


def center_test(alg: AlgebraDescriptor, f) -> bool:
    """True iff {f, g2, .., gn} = 0 for every (n-1)-subset of generators.

    Each slot is a derivation, so vanishing on generators is enough.
    """
    gens = alg.generators()
    for sub in combinations(gens, alg.n - 1):
        if not bracket(alg, [f] + list(sub)).is_zero():
            return False
    return True


# epsilon-morphisms

@dataclass
class EpsilonFailure:
    reason: str

    def __bool__(self):
        return False


def epsilon_morphism_scalar(alg: Potential, images: Sequence[Poly]):
    """Scalar e with phi({f1..fn}) = e {phi(f1)..phi(fn)} for t_i -> images[i].

    Requires phi(Omega) = a*Omega + b with a != 0 and a constant nonzero
    Jacobian J; then e = a/J.  Returns an :class:`EpsilonFailure` when a
    condition fails (other than a zero Jacobian, which raises).
    """
    if not isinstance(alg, Potential):
        raise TypeError("epsilon-morphisms are defined for potential algebras")
    nv = alg.nvars
    if len(images) != nv:
        raise ValueError(f"arity mismatch: need {nv} images, got {len(images)}")
    images = [RatFn.lift(g).as_poly() if isinstance(g, RatFn) else g for g in images]
    if any(g is None or g.nvars != nv for g in images):
        raise ValueError("images must be polynomials in the algebra's variables")
    images = [g.as_polynomial() for g in images]
    J = matrix_det([[poly_partial(g, i) for i in range(1, nv + 1)] for g in images])
    if J.is_zero():
        raise ValueError("zero Jacobian: the images do not define an automorphism")
    if not J.is_constant():
        return EpsilonFailure("not an automorphism candidate: Jacobian is not constant")
    phi_omega = poly_substitute(alg.omega, images).num
    # a is read off a nonconstant monomial of Omega
    probe = next(((e, c) for e, c in alg.omega.items() if any(e)), None)
    if probe is None:
        return EpsilonFailure("constant potential")
    e0, c0 = probe
    a = Fraction(phi_omega.coeff(e0)) / Fraction(c0)
    if a == 0:
        return EpsilonFailure("phi(Omega) is not a nonzero multiple of Omega plus a constant")
    rest = phi_omega - alg.omega * _norm(a)
    if not rest.is_constant():
        return EpsilonFailure("phi(Omega) is not a nonzero multiple of Omega plus a constant")
    e = _norm(a / Fraction(J.constant_term()))
    gens = alg.generators()
    for sub in combinations(range(nv), alg.n):
        args = [gens[k] for k in sub]
        lhs = poly_substitute(bracket(alg, args), images).num
        rhs = bracket(alg, [images[k] for k in sub]) * e
        if lhs != rhs:
            return EpsilonFailure(f"bracket transport fails on generators {tuple(k + 1 for k in sub)}")
    return e


# monomial change of basis on tori

def torus_transport_identity(alg: Torus, A: Sequence[Sequence[int]]) -> bool:
    """Check {y}.prod(y)^-1 = det(A).{x}.prod(x)^-1 for y_i = prod_j x_j^A[i][j]."""
    from .exact_algebra import int_det
    n = alg.n
    ys = [Poly(n, {tuple(row): 1}, laurent=True) for row in A]
    prod_y = Poly(n, {tuple(sum(col) for col in zip(*A)): 1}, laurent=True)
    lhs = bracket(alg, ys) * prod_y ** -1
    gens = alg.generators()
    prod_x = Poly(n, {(1,) * n: 1}, laurent=True)
    rhs = bracket(alg, gens) * prod_x ** -1 * int_det(A)
    return rf_equal(RatFn(*_split_laurent(lhs)), RatFn(*_split_laurent(rhs)))
