"""Brackets from a potential: axioms, generator brackets, singularities."""

from nambu import Potential, bracket, fermat, is_isolated_singularity, parse_poly, sign_law_holds
from nambu.expression import format_expr
from nambu.nambu_bracket import random_leibniz_samples, random_tuples, verify_fundamental_identity, verify_leibniz

omega = parse_poly("t1*t2*t3*t4")
alg = Potential(3, omega)
t1, t2, t3, t4 = alg.generators()
print("{t2, t3, t4} =", format_expr(bracket(alg, [t2, t3, t4])))
print("sign law holds:", sign_law_holds(alg))

fi = verify_fundamental_identity(alg, random_tuples(alg, 20, 5, seed=1))
lb = verify_leibniz(alg, random_leibniz_samples(alg, 20, seed=2))
print(f"fundamental identity {fi.checked} samples ok={fi.ok}; Leibniz {lb.checked} ok={lb.ok}")

for d in (3, 4, 5):
    iso, dim = is_isolated_singularity(fermat(2, d))
    print(f"sum t_s^{d} in 3 variables: isolated={iso}, Milnor number {dim}")
print("t1*t2*t3:", tuple(is_isolated_singularity(parse_poly("t1*t2*t3"))))
