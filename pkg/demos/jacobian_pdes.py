"""The separable Jacobian PDE decider on a few catalogue shapes."""

from nambu import pde_compose, pde_decide, parse_ratfn
from nambu.expression import format_expr

cases = [
    ("2*t1*t2*t3", "6*t1*t2*t3"),
    ("2*t1*t2*t3", "3*t1*t2*t3"),
    ("1", "5*t1*t2*t3"),
    ("t1^3*t2*t3", "t1^5*t2*t3"),
    ("t1^5*t2*t3", "7*t1^3*t2*t3"),
    ("t1*t2*t3*(1 + t2)", "t1*t2*t3*(1 + t1 + t1^3)"),
    ("t1*t2*t3*(t1 + t2^2)", "t1*t2*t3"),
    ("t1 + t2", "t1*t2"),
]
for a, b in cases:
    res = pde_decide(parse_ratfn(a, 3), parse_ratfn(b, 3))
    extra = [format_expr(y) for y in res.witness] if res.status == "solvable" else getattr(res, "citation", "")
    print(f"a={a:24s} b={b:26s} {res.status:10s} {extra}")

f1 = pde_decide(parse_ratfn("t1*t2*t3", 3), parse_ratfn("2*t1*t2*t3", 3))
f2 = pde_decide(parse_ratfn("2*t1*t2*t3", 3), parse_ratfn("4*t1*t2*t3", 3))
print("composed:", [format_expr(y) for y in pde_compose(f1, f2).witness])
