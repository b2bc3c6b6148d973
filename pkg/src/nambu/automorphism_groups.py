"""Diagonal solution groups and automorphism groups for Fermat potentials
Omega = sum t_s^m with m = n + 1 + d0.

A root of unity a = zeta_L^e is stored as its exponent e in Z/L, so every
multiplicative constraint becomes a linear congruence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional, Sequence

from .exact_algebra import permutation_sign
from .nambu_bracket import fermat

DEFAULT_BUDGET = 10 ** 7


class BudgetExceeded(RuntimeError):
    pass


class InfiniteGroupError(ValueError):
    pass


def _check_params(n: int, d0: int):
    if n < 2:
        raise ValueError("n must be at least 2")
    if d0 < 2:
        raise ValueError("d0 must be at least 2")


@dataclass(frozen=True)
class SolutionGroup:
    label: str
    n: int
    d0: int
    modulus: int
    elements: frozenset

    @property
    def m(self) -> int:
        return self.n + 1 + self.d0

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def is_group(self) -> bool:
        L = self.modulus
        zero = (0,) * (self.n + 1)
        if zero not in self.elements:
            return False
        els = self.elements
        for e in els:
            if tuple(-x % L for x in e) not in els:
                return False
        # closure on a generating half is enough in principle, but the sets
        # are small, so check every pair
        for e in els:
            for f in els:
                if tuple((x + y) % L for x, y in zip(e, f)) not in els:
                    return False
        return True


def group_modulus(label: str, n: int, d0: int) -> int:
    m = n + 1 + d0
    if label == "G0":
        return m * d0
    if label in ("G1", "G3"):
        return m
    if label == "G2":
        raise InfiniteGroupError("G2 is an infinite group")
    raise ValueError(f"unknown group label {label!r}")


def in_group(label: str, n: int, d0: int, e: Sequence[int], L: int) -> bool:
    """Membership of exponent tuple e (roots of unity of order dividing L)."""
    m = n + 1 + d0
    S = sum(e)
    if label == "G0":
        return all((S - m * x) % L == 0 for x in e)
    if label == "G1":
        return S % L == 0 and all((m * x) % L == 0 for x in e)
    if label == "G3":
        return all((m * x) % L == 0 for x in e)
    if label == "G2":
        raise InfiniteGroupError("G2 is an infinite group")
    raise ValueError(f"unknown group label {label!r}")


def enumerate_group(label: str, n: int, d0: int, budget: int = DEFAULT_BUDGET) -> SolutionGroup:
    """All solutions, enumerated class by class.

    For G0 every coordinate satisfies m*e_i = c (mod L) with c = sum(e), so
    for each admissible c the coordinates range over the m solutions of that
    congruence and the last one is forced.
    """
    _check_params(n, d0)
    L = group_modulus(label, n, d0)
    m = n + 1 + d0
    k = n + 1
    elements = set()
    if label == "G3":
        if L ** k > budget:
            raise BudgetExceeded(f"{L ** k} tuples exceed the budget {budget}")
        elements = set(product(range(L), repeat=k))
    elif label == "G1":
        if L ** n > budget:
            raise BudgetExceeded(f"{L ** n} tuples exceed the budget {budget}")
        for head in product(range(L), repeat=n):
            elements.add(head + ((-sum(head)) % L,))
    else:
        work = d0 * m ** n
        if work > budget:
            raise BudgetExceeded(f"{work} tuples exceed the budget {budget}")
        for c in range(0, L, math.gcd(m, L)):
            roots = [x for x in range(L) if (m * x - c) % L == 0]
            allowed = set(roots)
            for head in product(roots, repeat=n):
                last = (c - sum(head)) % L
                if last in allowed:
                    elements.add(head + (last,))
    G = SolutionGroup(label, n, d0, L, frozenset(elements))
    return G


def closed_form_order(label: str, n: int, d0: int) -> int:
    m = n + 1 + d0
    return {"G0": d0 * m ** n, "G1": m ** n, "G3": m ** (n + 1)}[label]


# monomial automorphisms x_i -> a_i x_sigma(i)

def _normalize_sigma(sigma: Sequence[int], k: int) -> tuple:
    s = tuple(int(x) for x in sigma)
    if len(s) != k:
        raise ValueError(f"permutation must have length {k}")
    if sorted(s) == list(range(1, k + 1)):
        s = tuple(x - 1 for x in s)
    if sorted(s) != list(range(k)):
        raise ValueError("not a permutation")
    return s


def verify_monomial_automorphism(n: int, d0: int, sigma: Sequence[int], e: Sequence[int],
                                 modulus: Optional[int] = None, xi_mode: bool = False) -> bool:
    """Check prod_{s != i} a_s = sgn(sigma) a_i^(n+d0) for every i, with
    a_i = zeta_L^e_i; in xi mode also prod a_i = sgn(sigma).

    The check runs at modulus 2L, where -1 is zeta_2L^L.
    """
    _check_params(n, d0)
    k = n + 1
    m = n + 1 + d0
    L = modulus if modulus is not None else 2 * m * d0
    s = _normalize_sigma(sigma, k)
    if len(e) != k:
        raise ValueError(f"exponent tuple must have length {k}, got {len(e)}")
    if any(not 0 <= x < L for x in e):
        raise ValueError(f"exponents must lie in [0, {L})")
    M = 2 * L
    sign = L if permutation_sign(s) == -1 else 0
    ee = [2 * x for x in e]
    S = sum(ee)
    for x in ee:
        if (S - x - sign - (n + d0) * x) % M:
            return False
    if xi_mode and (S - sign) % M:
        return False
    return True


def solve_for_permutation(n: int, d0: int, sigma: Sequence[int], xi_mode: bool = False,
                          modulus: Optional[int] = None) -> Optional[tuple]:
    """Some exponent tuple making x_i -> a_i x_sigma(i) an automorphism,
    found by search at modulus 2*m*d0 (or the given one); None if none."""
    _check_params(n, d0)
    k = n + 1
    m = n + 1 + d0
    L = modulus if modulus is not None else 2 * m * d0
    s = _normalize_sigma(sigma, k)
    if permutation_sign(s) == -1 and L % 2:
        return None
    b = L // 2 if permutation_sign(s) == -1 else 0
    # S - m e_i = b for all i; put c = S - b, so m e_i = c
    for c in range(0, L, math.gcd(m, L)):
        roots = [x for x in range(L) if (m * x - c) % L == 0]
        allowed = set(roots)
        for head in product(roots, repeat=n):
            last = (c + b - sum(head)) % L
            if last in allowed:
                e = head + (last,)
                if verify_monomial_automorphism(n, d0, s, e, L, xi_mode):
                    return e
    return None


# structure of the automorphism groups

S_GROUP = "S"
A_GROUP = "A"


@dataclass(frozen=True)
class AutStructure:
    n: int
    d0: int
    xi_nonzero: bool
    variant: str
    kernel: SolutionGroup
    quotient: str          # "S_{n+1}" or "A_{n+1}"
    semidirect: bool
    order: int

    @property
    def quotient_order(self) -> int:
        f = math.factorial(self.n + 1)
        return f // 2 if self.quotient.startswith("A") else f


VARIANTS = ("poisson", "fixed_quasi_axis")


def fermat_aut_structure(n: int, d0: int, xi=0, variant: str = "poisson", omega=None,
                         budget: int = DEFAULT_BUDGET) -> AutStructure:
    """Kernel, quotient and splitting of the automorphism group.

    ``poisson`` gives Aut of P_Omega (xi = 0) or P_{Omega - xi}; the
    ``fixed_quasi_axis`` variant gives Aut(A | {Omega}), split by the
    permutation matrices, which fix Omega.
    """
    _check_params(n, d0)
    if omega is not None and omega != fermat(n, n + 1 + d0):
        raise ValueError("automorphism structure is only covered for Fermat potentials")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    xi_nz = xi != 0
    q_s = f"S_{n + 1}"
    if variant == "fixed_quasi_axis":
        kernel = enumerate_group("G3", n, d0, budget)
        quotient, semi = q_s, True
    elif not xi_nz:
        kernel = enumerate_group("G0", n, d0, budget)
        quotient, semi = q_s, d0 % 2 == 1
    else:
        kernel = enumerate_group("G1", n, d0, budget)
        quotient = f"A_{n + 1}" if (n + d0) % 2 == 0 else q_s
        semi = True
    f = math.factorial(n + 1)
    qo = f // 2 if quotient.startswith("A") else f
    return AutStructure(n, d0, xi_nz, variant, kernel, quotient, semi, kernel.order * qo)


def realized_quotient(n: int, d0: int, xi_mode: bool) -> list:
    """Permutations sigma for which a diagonal twist exists, by search."""
    k = n + 1
    return [s for s in permutations(range(k)) if solve_for_permutation(n, d0, s, xi_mode) is not None]
