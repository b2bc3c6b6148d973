"""Normal forms of tori and the embedding questions between torus fields."""

from fractions import Fraction

from nambu import NK, QSkew, torus_embed_decide, torus_normal_form
from nambu.expression import format_expr

nf = torus_normal_form(5, (2, 4, 6))
print("T(5,(2,4,6)) ->", nf.kappa, "via", nf.witness, "verified:", nf.verified)

for q in (2, 3, -1, Fraction(1, 2), Fraction(3, 2)):
    res = torus_embed_decide(QSkew(q * 2), QSkew(2))
    wit = [format_expr(y, "x") for y in getattr(res, "witness", [])]
    print(f"N_{q * 2} -> N_2: {res.status} {res.citation} {wit}")

for k, k2 in ((2, 4), (3, 2), (2, 3)):
    res = torus_embed_decide(NK(k), NK(k2))
    print(f"N({k}) -> N({k2}): {res.status} {getattr(res, 'citation', '')}")
