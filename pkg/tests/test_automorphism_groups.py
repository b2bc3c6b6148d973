from itertools import permutations, product
from math import factorial

import pytest

from nambu.exact_algebra import poly_substitute
from nambu.automorphism_groups import (BudgetExceeded, InfiniteGroupError, SolutionGroup,
                                       closed_form_order, enumerate_group,
                                       fermat_aut_structure, group_modulus, in_group,
                                       realized_quotient, solve_for_permutation,
                                       verify_monomial_automorphism)
from nambu.nambu_bracket import Potential, epsilon_morphism_scalar, fermat

CASES = [(2, 2), (2, 3), (3, 2), (3, 3)]


def _brute(label, n, d0, M):
    m = n + 1 + d0
    out = set()
    for e in product(range(M), repeat=n + 1):
        S = sum(e)
        if label == "G3":
            ok = all(m * x % M == 0 for x in e)
        else:
            ok = all((S - x - (n + d0) * x) % M == 0 for x in e)
            if label == "G1":
                ok = ok and S % M == 0
        if ok:
            out.add(e)
    return out


@pytest.mark.parametrize("n, d0", CASES)
@pytest.mark.parametrize("label", ["G0", "G1", "G3"])
def test_counts_and_axioms(label, n, d0):
    G = enumerate_group(label, n, d0)
    assert G.order == closed_form_order(label, n, d0)
    assert G.is_group()
    assert all(in_group(label, n, d0, e, G.modulus) for e in G.elements)


@pytest.mark.parametrize("n, d0", [(2, 2), (2, 3)])
@pytest.mark.parametrize("label", ["G0", "G1", "G3"])
def test_brute_force_at_doubled_modulus(label, n, d0):
    G = enumerate_group(label, n, d0)
    brute = _brute(label, n, d0, 2 * G.modulus)
    assert all(x % 2 == 0 for e in brute for x in e)
    assert {tuple(x // 2 for x in e) for e in brute} == set(G.elements)


def test_spec_counts():
    assert enumerate_group("G3", 3, 2).order == 1296
    assert enumerate_group("G1", 3, 2).order == 216
    assert enumerate_group("G0", 3, 2).order == 432


def test_g2_and_budget():
    with pytest.raises(InfiniteGroupError):
        enumerate_group("G2", 3, 2)
    with pytest.raises(InfiniteGroupError):
        group_modulus("G2", 3, 2)
    with pytest.raises(BudgetExceeded):
        enumerate_group("G3", 3, 3, budget=100)
    with pytest.raises(ValueError):
        enumerate_group("G9", 3, 3)
    with pytest.raises(ValueError):
        enumerate_group("G0", 1, 2)


def test_is_group_detects_non_groups():
    G = SolutionGroup("G1", 2, 2, 5, frozenset({(0, 0, 0), (1, 0, 4)}))
    assert not G.is_group()


@pytest.mark.parametrize("n, d0", [(2, 2), (2, 3), (3, 2)])
def test_identity_sigma_verifies_kernel(n, d0):
    m = n + 1 + d0
    L = 2 * m * d0
    G0 = enumerate_group("G0", n, d0)
    scale = L // G0.modulus
    for e in G0.elements:
        assert verify_monomial_automorphism(n, d0, range(n + 1), [scale * x for x in e])
    G1 = enumerate_group("G1", n, d0)
    scale = L // G1.modulus
    for e in G1.elements:
        assert verify_monomial_automorphism(n, d0, range(n + 1), [scale * x for x in e], xi_mode=True)


def test_verify_examples():
    n = 3
    for d0 in (3, 5):
        m = n + 1 + d0
        L = 2 * m * d0
        assert verify_monomial_automorphism(n, d0, [0, 1, 2, 3], [0] * 4)
        # a_i = -1 for every i under a transposition
        assert verify_monomial_automorphism(n, d0, [1, 0, 2, 3], [L // 2] * 4)
    assert not verify_monomial_automorphism(3, 2, [1, 0, 2, 3], [0] * 4)
    # one-based permutations are accepted too
    assert verify_monomial_automorphism(3, 3, [2, 1, 3, 4], [42 // 2] * 4)


def test_verify_errors():
    with pytest.raises(ValueError):
        verify_monomial_automorphism(3, 2, [0, 0, 1, 2], [0] * 4)
    with pytest.raises(ValueError):
        verify_monomial_automorphism(3, 2, [0, 1, 2, 3], [0] * 3)
    with pytest.raises(ValueError):
        verify_monomial_automorphism(3, 2, [0, 1, 2, 3], [0, 0, 0, 999])


@pytest.mark.parametrize("n, d0", [(2, 2), (2, 3), (3, 2)])
def test_equations_agree_with_bracket_engine(n, d0):
    """For a_i = +-1 the monomial map is rational, so the bracket engine
    decides the automorphism property on its own."""
    m = n + 1 + d0
    L = 2 * m * d0
    om = fermat(n, m)
    alg = Potential(n, om)
    g = alg.generators()
    for s in permutations(range(n + 1)):
        for signs in product((1, -1), repeat=n + 1):
            imgs = [g[s[i]] * signs[i] for i in range(n + 1)]
            poisson = epsilon_morphism_scalar(alg, imgs) == 1
            fixes = poisson and poly_substitute(om, imgs).num == om
            e = [0 if c == 1 else L // 2 for c in signs]
            assert verify_monomial_automorphism(n, d0, s, e) == poisson
            assert verify_monomial_automorphism(n, d0, s, e, xi_mode=True) == fixes


def test_realized_quotients():
    # xi != 0: every even permutation lifts; odd ones lift iff n + d0 is odd
    assert len(realized_quotient(2, 2, True)) == 3
    assert len(realized_quotient(3, 2, True)) == 24
    assert len(realized_quotient(2, 3, True)) == 6
    assert len(realized_quotient(2, 2, False)) == 6
    for s in permutations(range(3)):
        e = solve_for_permutation(2, 3, s, False)
        assert e is not None and verify_monomial_automorphism(2, 3, s, e)


def test_structure_examples():
    s = fermat_aut_structure(3, 3, 0)
    assert s.order == 3 * 7 ** 3 * 24 == 24696
    assert s.semidirect and s.quotient == "S_4" and s.kernel.label == "G0"
    s = fermat_aut_structure(3, 2, 1)
    assert s.kernel.label == "G1" and s.quotient == "S_4" and s.order == 216 * 24
    s = fermat_aut_structure(2, 2, 1)
    assert s.quotient == "A_3" and s.order == 25 * 3 and s.quotient_order == 3
    assert not fermat_aut_structure(3, 2, 0).semidirect


def test_quotient_structure_matches_search():
    for n, d0 in [(2, 2), (2, 3), (3, 2)]:
        s = fermat_aut_structure(n, d0, 1)
        assert len(realized_quotient(n, d0, True)) == s.quotient_order


def test_fixed_quasi_axis_variant():
    s = fermat_aut_structure(2, 2, 0, variant="fixed_quasi_axis")
    assert s.kernel.label == "G3" and s.semidirect and s.order == 5 ** 3 * 6
    with pytest.raises(ValueError):
        fermat_aut_structure(2, 2, 0, variant="other")
    with pytest.raises(ValueError):
        fermat_aut_structure(2, 2, 0, omega=fermat(2, 4))


def test_order_stable_under_larger_modulus():
    for n, d0 in [(2, 2), (2, 3)]:
        G = enumerate_group("G0", n, d0)
        again = _brute("G0", n, d0, 3 * G.modulus)
        assert len(again) == G.order
        assert factorial(n + 1) * len(again) == fermat_aut_structure(n, d0, 0).order
