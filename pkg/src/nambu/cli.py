"""Command-line front end.

Every command prints one JSON object (or a short text rendering with
``--format text``)::

    {"status": ..., "command": ..., "result": ..., "witness": ..., "citation": ...}

Exit codes: 0 success or true verdict, 1 negative verdict, 2 usage or parse
error, 3 unknown or uncovered.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from . import automorphism_groups as ag
from . import grading_valuation as gv
from . import nambu_bracket as nb
from . import pde_decider as pd
from . import singularity as sg
from . import torus_invariants as ti
from .exact_algebra import Poly, RatFn
from .expression import ParseError, format_expr, parse_expression, parse_poly, parse_ratfn

EXIT_CODES = {"ok": 0, "false": 1, "no": 1, "unsolvable": 1, "error": 2,
              "unknown": 3, "uncovered": 3}

OUTPUT_SCHEMA = {
    "type": "object",
    "required": ["status", "command", "result"],
    "properties": {
        "status": {"enum": sorted(EXIT_CODES)},
        "command": {"type": "string"},
        "result": {},
        "witness": {},
        "citation": {"type": "string"},
    },
    "additionalProperties": False,
}


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    status: str
    result: Any
    witness: Any = None
    citation: Optional[str] = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# value helpers

def _frac(text) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def _ints(text, what="list") -> tuple:
    if isinstance(text, (list, tuple)):
        return tuple(int(x) for x in text)
    try:
        return tuple(int(x) for x in str(text).replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers for {what}: {text!r}") from exc


def _weights(text):
    """'1,1,1' for scalar weights, '1,0;0,1;..' for vectors in Z^m."""
    if isinstance(text, (list, tuple)):
        return tuple(text)
    text = str(text).strip()
    if ";" in text:
        return tuple(_ints(part, "weights") for part in text.split(";"))
    return _ints(text, "weights")


def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (Poly, RatFn)):
        return format_expr(x)
    if isinstance(x, (gv.OrderedValue, gv._Infinity)):
        return x.to_json()
    if x is sg.INFINITE:
        return "Infinite"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    return x


# algebra descriptors

def _load_descriptor(path) -> dict:
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read descriptor {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("descriptor must be a JSON object")
    if "result" in data and isinstance(data["result"], dict):
        data = data["result"]
    if "algebra" in data and isinstance(data["algebra"], dict):
        data = data["algebra"]
    return data


def _pick(args, desc, name):
    v = getattr(args, name, None)
    return v if v is not None else desc.get(name)


def _algebra(args, need=None):
    desc = _load_descriptor(getattr(args, "descriptor", None))
    potential = _pick(args, desc, "potential")
    q = _pick(args, desc, "q")
    n = _pick(args, desc, "n")
    if potential is not None and q is not None:
        raise UsageError("give either --potential or --q/--kappa, not both")
    if potential is not None:
        if need == "torus":
            raise UsageError("this command needs a torus (--q, --kappa)")
        omega = parse_poly(str(potential), int(n) + 1 if n is not None else None)
        n = int(n) if n is not None else omega.nvars - 1
        if omega.nvars != n + 1:
            omega = parse_poly(str(potential), n + 1)
        kind = _pick(args, desc, "kind") or nb.FULL
        xi = _frac(_pick(args, desc, "xi") or 0)
        if xi != 0 and kind == nb.FULL:
            kind = nb.SHIFTED
        return nb.Potential(n, omega, kind, xi)
    if q is not None:
        if need == "potential":
            raise UsageError("this command needs a potential (--potential)")
        kappa = _pick(args, desc, "kappa")
        kappa = _ints(kappa, "kappa") if kappa is not None else None
        if n is None:
            if kappa is None:
                raise UsageError("--n is required for a torus without --kappa")
            n = len(kappa)
        return nb.Torus(int(n), _frac(q), kappa)
    raise UsageError("no algebra given: use --potential or --q (or --descriptor)")


def describe_algebra(alg) -> dict:
    if isinstance(alg, nb.Potential):
        return {"n": alg.n, "potential": format_expr(alg.omega), "kind": alg.kind,
                "xi": _jsonable(alg.xi)}
    return {"n": alg.n, "q": _jsonable(alg.q), "kappa": list(alg.kappa)}


def _parse_in(alg, text):
    mode = "laurent" if isinstance(alg, nb.Torus) else "poly"
    return parse_expression(str(text), mode, alg.nvars).value


def _fmt(alg, value):
    return format_expr(value, alg.prefix)


# command handlers

def cmd_bracket(args):
    alg = _algebra(args)
    if not args.args:
        raise UsageError("--args needs the bracket arguments")
    vals = [_parse_in(alg, a) for a in args.args]
    res = nb.bracket(alg, vals)
    return Outcome("ok", {"value": _fmt(alg, res), "algebra": describe_algebra(alg)})


def cmd_verify_axioms(args):
    alg = _algebra(args)
    wanted = ["alternating", "fundamental", "leibniz"] if args.axiom == "all" else [args.axiom]
    kw = dict(max_degree=args.degree, coeff_range=(-args.coeff, args.coeff))
    out = {}
    for ax in wanted:
        if ax == "alternating":
            rep = nb.verify_alternating(alg, nb.random_tuples(alg, args.samples, alg.n, args.seed, **kw))
        elif ax == "fundamental":
            rep = nb.verify_fundamental_identity(
                alg, nb.random_tuples(alg, args.samples, 2 * alg.n - 1, args.seed, **kw))
        else:
            rep = nb.verify_leibniz(alg, nb.random_leibniz_samples(alg, args.samples, args.seed, **kw))
        out[ax] = {"checked": rep.checked, "failures": len(rep.failures)}
    ok = all(v["failures"] == 0 for v in out.values())
    return Outcome("ok" if ok else "false", {"axioms": out, "algebra": describe_algebra(alg)})


def cmd_center(args):
    alg = _algebra(args)
    if args.f is not None:
        f = _parse_in(alg, args.f)
    elif isinstance(alg, nb.Potential):
        f = alg.omega
    else:
        raise UsageError("--f is required for a torus")
    central = nb.center_test(alg, f)
    res = {"central": central, "f": _fmt(alg, f)}
    if isinstance(alg, nb.Potential) and args.f is None:
        res["sign_law"] = nb.sign_law_holds(alg)
        central = central and res["sign_law"]
    return Outcome("ok" if central else "false", res)


def cmd_singularity(args):
    if args.potential is None:
        desc = _load_descriptor(args.descriptor)
        if "potential" not in desc:
            raise UsageError("--potential is required")
        args.potential = desc["potential"]
    nv = args.n + 1 if args.n is not None else None
    omega = parse_poly(args.potential, nv)
    try:
        rep = sg.is_isolated_singularity(omega, args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    res = {"isolated": rep.isolated, "dimension": _jsonable(rep.dimension),
           "low_degree": rep.low_degree, "order": args.order}
    return Outcome("ok" if rep.isolated else "false", res)


def _valuation(args, alg):
    if args.weights is None:
        raise UsageError("--weights is required")
    try:
        return gv.WeightValuation(alg, _weights(args.weights))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_valuation_check(args):
    alg = _algebra(args)
    v = _valuation(args, alg)
    w = _weights(args.w) if args.w is not None else 0
    if isinstance(w, tuple) and len(w) == 1:
        w = w[0]
    ok = gv.check_w_valuation(v, w)
    res = {"w_valuation": ok, "w": _jsonable(gv.as_value(w))}
    res["classical"] = gv.is_classical(v, w) if ok else None
    if isinstance(alg, nb.Torus) and v.m == 1 and w == 0:
        res["faithful"] = gv.torus_faithful_check(v)
    return Outcome("ok" if ok else "false", res)


def cmd_valuation_gr(args):
    alg = _algebra(args)
    v = _valuation(args, alg)
    w = args.w if args.w is not None else "0"
    w = _weights(w)
    w = w[0] if len(w) == 1 else w
    if not args.args:
        raise UsageError("--args needs the bracket arguments")
    vals = [_parse_in(alg, a) for a in args.args]
    if any(x.is_zero() for x in vals):
        return Outcome("ok", {"value": "0", "leading_forms": [_fmt(alg, x) for x in vals]})
    leads = [gv.leading_form(v, x) for x in vals]
    res = gv.graded_bracket(v, w, leads)
    return Outcome("ok", {"value": _fmt(alg, res), "leading_forms": [_fmt(alg, x) for x in leads]})


def cmd_valuation_value(args):
    alg = _algebra(args)
    v = _valuation(args, alg)
    if args.f is None:
        raise UsageError("--f is required")
    text = str(args.f)
    if ":" in text:
        val = gv.rf_value(v, parse_expression(text, "ratfn", alg.nvars).value)
    else:
        val = gv.value_of(v, _parse_in(alg, text))
    return Outcome("ok", {"value": _jsonable(val)})


def cmd_torus_normalize(args):
    if args.q is None or args.kappa is None:
        raise UsageError("--q and --kappa are required")
    try:
        nf = ti.torus_normal_form(_frac(args.q), _ints(args.kappa, "kappa"))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    res = {"q": _jsonable(nf.q), "kappa": list(nf.kappa), "scalar": _jsonable(nf.scalar),
           "verified": nf.verified}
    return Outcome("ok" if nf.verified else "false", res, witness=[list(r) for r in nf.witness])


def cmd_torus_iso(args):
    if None in (args.q, args.q2):
        raise UsageError("--q and --q2 are required")
    k1 = _ints(args.kappa, "kappa") if args.kappa is not None else None
    k2 = _ints(args.kappa2, "kappa2") if args.kappa2 is not None else None
    n = args.n or len(k1 or k2 or ()) or None
    if n is None:
        raise UsageError("--n is required without --kappa")
    t1 = nb.Torus(n, _frac(args.q), k1)
    t2 = nb.Torus(n, _frac(args.q2), k2)
    iso = ti.torus_iso_decide(t1, t2)
    return Outcome("ok" if iso else "false", {"isomorphic": iso,
                                              "kappa_invariants": [ti.kappa_invariant(t1.kappa),
                                                                   ti.kappa_invariant(t2.kappa)]})


def _field(kind, q, k, n, args=None):
    if kind == "qskew":
        if q is None:
            raise UsageError("a q-skew field needs q")
        return ti.QSkew(_frac(q), n)
    if kind == "nk":
        if k is None:
            raise UsageError("N(k) needs k")
        return ti.NK(int(k), n)
    if kind == "weyl":
        return ti.WeylField(n)
    if kind == "potential":
        return ti.PotentialField(_algebra(args, need="potential"))
    raise UsageError(f"unknown field {kind!r}")


def _field_from_flags(q, k, weyl, n, which):
    given = [x is not None and x is not False for x in (q, k, weyl)]
    if sum(given) != 1:
        raise UsageError(f"give exactly one of --{which}-q, --{which}-k, --{which}-weyl")
    if q is not None:
        return ti.QSkew(_frac(q), n)
    if k is not None:
        return ti.NK(int(k), n)
    return ti.WeylField(n)


def cmd_torus_embed(args):
    n = args.n or 3
    src = _field_from_flags(args.from_q, args.from_k, args.from_weyl or None, n, "from")
    dst = _field_from_flags(args.to_q, args.to_k, args.to_weyl or None, n, "to")
    v = ti.torus_embed_decide(src, dst)
    if isinstance(v, ti.Yes):
        return Outcome("ok", {"embeds": True}, [format_expr(y, "x") for y in v.witness], v.citation)
    if isinstance(v, ti.No):
        res = {"embeds": False}
        if v.valuations:
            res["valuations"] = [_jsonable(val.weights) for val in v.valuations]
        return Outcome("no", res, citation=v.citation)
    return Outcome("unknown", {"embeds": None, "reason": v.reason})


def cmd_gamma(args):
    f = _field(args.field, args.q, args.k, args.n or 3, args)
    if args.w is None:
        raise UsageError("--w is required")
    cap = ti.gamma_cap_classify(f, int(args.w))
    if isinstance(cap, ti.Uncovered):
        return Outcome("uncovered", {"cap": cap.name, "reason": cap.reason})
    witness = None
    if isinstance(cap, ti.GroundField):
        witness = {"weights": _jsonable(cap.witness.weights),
                   "w_valuation": gv.check_w_valuation(cap.witness, int(args.w))}
    return Outcome("ok", {"cap": cap.name}, witness)


def cmd_depth_width(args):
    f = _field(args.field, args.q, args.k, args.n or 3, args)
    r = ti.depth_width_lookup(f)
    if isinstance(r, ti.Uncovered):
        return Outcome("uncovered", {"reason": r.reason})
    return Outcome("ok", {"depth": r[0], "width": r[1]})


def cmd_aut_fermat(args):
    try:
        s = ag.fermat_aut_structure(args.n, args.d0, _frac(args.xi), args.variant, budget=args.budget)
    except ag.BudgetExceeded as exc:
        raise UsageError(str(exc)) from exc
    res = {"kernel": s.kernel.label, "kernel_order": s.kernel.order, "quotient": s.quotient,
           "semidirect": s.semidirect, "order": s.order}
    return Outcome("ok", res)


def cmd_aut_verify(args):
    if args.sigma is None or args.e is None:
        raise UsageError("--sigma and --e are required")
    try:
        ok = ag.verify_monomial_automorphism(args.n, args.d0, _ints(args.sigma, "sigma"),
                                             _ints(args.e, "e"), args.modulus, args.xi_mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return Outcome("ok" if ok else "false", {"automorphism": ok})


def cmd_groups_enumerate(args):
    try:
        G = ag.enumerate_group(args.label, args.n, args.d0, args.budget)
    except ag.InfiniteGroupError as exc:
        return Outcome("error", {"error": str(exc)})
    except ag.BudgetExceeded as exc:
        return Outcome("error", {"error": str(exc)})
    res = {"label": G.label, "modulus": G.modulus, "order": G.order,
           "closed_form": ag.closed_form_order(G.label, G.n, G.d0)}
    if args.list:
        res["elements"] = sorted(list(e) for e in G.elements)
    return Outcome("ok", res)


def _pde_nvars(args, *texts):
    if args.n is not None:
        return args.n
    idx = 1
    for t in texts:
        if t is None:
            continue
        e = parse_expression(str(t), "ratfn" if ":" in str(t) else "laurent", None)
        idx = max(idx, e.nvars)
    return idx


def _side(text, n):
    return parse_ratfn(str(text), n)


def cmd_pde_decide(args):
    if args.a is None or args.b is None:
        raise UsageError("--a and --b are required")
    n = _pde_nvars(args, args.a, args.b)
    v = pd.pde_decide(_side(args.a, n), _side(args.b, n))
    return _pde_outcome(v)


def _pde_outcome(v):
    if isinstance(v, pd.Solvable):
        return Outcome("ok", {"verdict": "Solvable"}, [format_expr(y) for y in v.witness], v.citation)
    if isinstance(v, pd.Unsolvable):
        res = {"verdict": "Unsolvable"}
        if v.valuations:
            res["valuations"] = [list(w) for w in v.valuations]
        return Outcome("unsolvable", res, citation=v.criterion)
    return Outcome("unknown", {"verdict": "Unknown", "reason": v.reason})


def cmd_pde_verify(args):
    if args.a is None or args.b is None or not args.y:
        raise UsageError("--a, --b and --y are required")
    n = _pde_nvars(args, args.a, args.b, *args.y)
    ys = [_side(y, n) for y in args.y]
    ok = pd.verify_pde_solution(_side(args.a, n), _side(args.b, n), ys)
    return Outcome("ok" if ok else "false", {"solution": ok})


def cmd_pde_compose(args):
    if None in (args.a, args.b, args.c) or not args.y1 or not args.y2:
        raise UsageError("--a, --b, --c, --y1 and --y2 are required")
    n = _pde_nvars(args, args.a, args.b, args.c, *args.y1, *args.y2)
    a, b, c = (pd.classify_side(_side(x, n)) for x in (args.a, args.b, args.c))
    y1 = [_side(y, n) for y in args.y1]
    y2 = [_side(y, n) for y in args.y2]
    if not pd.verify_pde_solution(a, b, y1):
        return Outcome("false", {"composed": False, "reason": "first solution does not verify"})
    if not pd.verify_pde_solution(b, c, y2):
        return Outcome("false", {"composed": False, "reason": "second solution does not verify"})
    fact = pd.pde_compose(pd.Solvable(y1, "", a, b), pd.Solvable(y2, "", b, c))
    return Outcome("ok", {"composed": True}, [format_expr(y) for y in fact.witness], fact.citation)


def cmd_epsilon(args):
    alg = _algebra(args, need="potential")
    if not args.images:
        raise UsageError("--images is required")
    imgs = [_parse_in(alg, x) for x in args.images]
    try:
        e = nb.epsilon_morphism_scalar(alg, imgs)
    except ValueError as exc:
        return Outcome("false", {"epsilon": None, "reason": str(exc)})
    if isinstance(e, nb.EpsilonFailure):
        return Outcome("false", {"epsilon": None, "reason": e.reason})
    return Outcome("ok", {"epsilon": _jsonable(Fraction(e))})


# parser

def _algebra_flags(p):
    p.add_argument("--n", type=int)
    p.add_argument("--potential")
    p.add_argument("--kind", choices=list(nb.KINDS))
    p.add_argument("--xi")
    p.add_argument("--q")
    p.add_argument("--kappa")


def _common():
    p = _Parser(add_help=False)
    p.add_argument("--format", choices=["json", "text"], default=None)
    p.add_argument("--descriptor")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    root = _Parser(prog="nambu", description="Exact computations with Nambu-Poisson brackets.",
                   parents=[common])
    sub = root.add_subparsers(dest="cmd", parser_class=_Parser)

    def leaf(container, name, handler, help_text, algebra=False):
        p = container.add_parser(name, help=help_text, parents=[common])
        if algebra:
            _algebra_flags(p)
        p.set_defaults(handler=handler)
        return p

    p = leaf(sub, "bracket", cmd_bracket, "evaluate a bracket", algebra=True)
    p.add_argument("--args", nargs="+")

    verify = sub.add_parser("verify", help="axiom checks", parents=[common])
    vsub = verify.add_subparsers(dest="sub", parser_class=_Parser)
    p = leaf(vsub, "axioms", cmd_verify_axioms, "sample the bracket axioms", algebra=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--coeff", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--axiom", choices=["all", "alternating", "fundamental", "leibniz"], default="all")

    p = leaf(sub, "center", cmd_center, "test centrality (default: the potential)", algebra=True)
    p.add_argument("--f")

    p = leaf(sub, "singularity", cmd_singularity, "isolated singularity test")
    p.add_argument("--potential")
    p.add_argument("--n", type=int)
    p.add_argument("--order", choices=list(sg.ORDERS), default="degrevlex")

    val = sub.add_parser("valuation", help="weight valuations", parents=[common])
    valsub = val.add_subparsers(dest="sub", parser_class=_Parser)
    for name, handler in (("check", cmd_valuation_check), ("gr", cmd_valuation_gr),
                          ("value", cmd_valuation_value)):
        p = leaf(valsub, name, handler, f"valuation {name}", algebra=True)
        p.add_argument("--weights")
        p.add_argument("--w")
        if name == "gr":
            p.add_argument("--args", nargs="+")
        if name == "value":
            p.add_argument("--f")

    torus = sub.add_parser("torus", help="torus invariants", parents=[common])
    tsub = torus.add_subparsers(dest="sub", parser_class=_Parser)
    p = leaf(tsub, "normalize", cmd_torus_normalize, "normal form of T(q, kappa)")
    p.add_argument("--q")
    p.add_argument("--kappa")
    p = leaf(tsub, "iso", cmd_torus_iso, "isomorphism of two tori")
    p.add_argument("--n", type=int)
    p.add_argument("--q")
    p.add_argument("--kappa")
    p.add_argument("--q2")
    p.add_argument("--kappa2")
    p = leaf(tsub, "embed", cmd_torus_embed, "embedding between N_q / N(k) fields")
    p.add_argument("--n", type=int)
    for side in ("from", "to"):
        p.add_argument(f"--{side}-q")
        p.add_argument(f"--{side}-k", type=int)
        p.add_argument(f"--{side}-weyl", action="store_true")

    for name, handler in (("gamma", cmd_gamma), ("depth-width", cmd_depth_width)):
        p = leaf(sub, name, handler, f"{name} classifier", algebra=True)
        p.add_argument("--field", choices=["qskew", "nk", "weyl", "potential"], required=True)
        p.add_argument("--k", type=int)
        if name == "gamma":
            p.add_argument("--w", type=int)

    aut = sub.add_parser("aut", help="automorphism groups", parents=[common])
    asub = aut.add_subparsers(dest="sub", parser_class=_Parser)
    p = leaf(asub, "fermat", cmd_aut_fermat, "structure of Aut for a Fermat potential")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d0", type=int, required=True)
    p.add_argument("--xi", default="0")
    p.add_argument("--variant", choices=list(ag.VARIANTS), default="poisson")
    p.add_argument("--budget", type=int, default=ag.DEFAULT_BUDGET)
    p = leaf(asub, "verify", cmd_aut_verify, "check a monomial automorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d0", type=int, required=True)
    p.add_argument("--sigma")
    p.add_argument("--e")
    p.add_argument("--modulus", type=int)
    p.add_argument("--xi-mode", action="store_true")

    groups = sub.add_parser("groups", help="solution groups", parents=[common])
    gsub = groups.add_subparsers(dest="sub", parser_class=_Parser)
    p = leaf(gsub, "enumerate", cmd_groups_enumerate, "enumerate G0, G1 or G3")
    p.add_argument("--label", choices=["G0", "G1", "G2", "G3"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d0", type=int, required=True)
    p.add_argument("--budget", type=int, default=ag.DEFAULT_BUDGET)
    p.add_argument("--list", action="store_true")

    pde = sub.add_parser("pde", help="separable Jacobian PDEs", parents=[common])
    psub = pde.add_subparsers(dest="sub", parser_class=_Parser)
    for name, handler in (("decide", cmd_pde_decide), ("verify", cmd_pde_verify),
                          ("compose", cmd_pde_compose)):
        p = leaf(psub, name, handler, f"pde {name}")
        p.add_argument("--n", type=int)
        p.add_argument("--a")
        p.add_argument("--b")
        if name == "verify":
            p.add_argument("--y", nargs="+")
        if name == "compose":
            p.add_argument("--c")
            p.add_argument("--y1", nargs="+")
            p.add_argument("--y2", nargs="+")

    p = leaf(sub, "epsilon-morphism", cmd_epsilon, "bracket scalar of an algebra map", algebra=True)
    p.add_argument("--images", nargs="+")
    return root


def _command_name(argv) -> str:
    words = []
    for a in argv:
        if a.startswith("-"):
            break
        words.append(a)
    return " ".join(words[:2]) if words[:1] and words[0] in (
        "verify", "valuation", "torus", "aut", "groups", "pde") else " ".join(words[:1])


def render(obj: dict, fmt: str) -> str:
    if fmt == "text":
        lines = [f"status: {obj['status']}", f"command: {obj['command']}"]
        res = obj["result"]
        if isinstance(res, dict):
            for k, v in res.items():
                lines.append(f"{k}: {json.dumps(v) if not isinstance(v, str) else v}")
        else:
            lines.append(f"result: {res}")
        if "witness" in obj:
            lines.append(f"witness: {json.dumps(obj['witness'])}")
        if "citation" in obj:
            lines.append(f"citation: {obj['citation']}")
        return "\n".join(lines)
    return json.dumps(obj, sort_keys=False)


# values such as "-1,0,0" or "-t1" would otherwise be read as flags
_NEGATIVE_VALUE = re.compile(r"^-(?:[\d(]|[tx]\d)")


def run(argv) -> tuple:
    """Execute a command line; returns (exit code, output object, format)."""
    argv = [" " + a if _NEGATIVE_VALUE.match(a) else a for a in argv]
    fmt = "json"
    if "--format" in argv:
        i = argv.index("--format")
        if i + 1 < len(argv) and argv[i + 1] in ("json", "text"):
            fmt = argv[i + 1]
    command = _command_name(argv)
    try:
        args = build_parser().parse_args(argv)
        if not hasattr(args, "handler"):
            raise UsageError("missing subcommand")
        out = args.handler(args)
    except UsageError as exc:
        out = Outcome("error", {"error": str(exc)})
    except ParseError as exc:
        out = Outcome("error", {"error": exc.message, "line": exc.line, "column": exc.column})
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        out = Outcome("error", {"error": str(exc)})
    obj = {"status": out.status, "command": command, "result": _jsonable(out.result)}
    if out.witness is not None:
        obj["witness"] = _jsonable(out.witness)
    if out.citation:
        obj["citation"] = out.citation
    return EXIT_CODES[out.status], obj, fmt


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    code, obj, fmt = run(argv)
    print(render(obj, fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
