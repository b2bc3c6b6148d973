import sympy
from hypothesis import settings, strategies as st

from nambu.exact_algebra import Poly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def to_sympy(p: Poly, prefix="t"):
    xs = sympy.symbols(f"{prefix}1:{p.nvars + 1}")
    out = sympy.Integer(0)
    for e, c in p.items():
        term = sympy.Rational(c.numerator, c.denominator) if hasattr(c, "denominator") else sympy.Integer(c)
        for x, k in zip(xs, e):
            term *= x ** k
        out += term
    return sympy.expand(out), xs


def from_sympy(expr, xs) -> Poly:
    P = sympy.Poly(sympy.expand(expr), *xs)
    from fractions import Fraction
    return Poly(len(xs), {m: Fraction(int(c.p), int(c.q)) for m, c in P.terms()})


def polys(nvars, max_deg=3, max_terms=4, laurent=False, coeffs=(-4, 4)):
    lo = -2 if laurent else 0
    exps = st.tuples(*[st.integers(lo, max_deg) for _ in range(nvars)])
    cs = st.integers(*coeffs).filter(bool)
    return st.dictionaries(exps, cs, max_size=max_terms).map(
        lambda d: Poly(nvars, d, laurent=laurent))
