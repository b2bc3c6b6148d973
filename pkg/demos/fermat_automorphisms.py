"""Diagonal kernels and permutation quotients of Fermat automorphism groups."""

from nambu import enumerate_group, fermat_aut_structure
from nambu.automorphism_groups import realized_quotient

for n, d0 in ((2, 2), (3, 2), (3, 3)):
    orders = {lab: enumerate_group(lab, n, d0).order for lab in ("G0", "G1", "G3")}
    print(f"n={n} d0={d0}: {orders}")
    for xi in (0, 1):
        s = fermat_aut_structure(n, d0, xi)
        print(f"   xi={xi}: {s.kernel.label} . {s.quotient}  semidirect={s.semidirect}  order={s.order}")
    print("   permutations with a diagonal twist (xi != 0):", len(realized_quotient(n, d0, True)))
