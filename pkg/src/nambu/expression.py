"""Text syntax for polynomials and rational functions.

Grammar::

    ratfn  := expr (':' expr)?          (ratfn mode only)
    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := rational | var ('^' int)? | '(' expr ')' ('^' int)?

Variables are ``t1, t2, ...`` or ``x1, x2, ...`` (one prefix per
expression).  Rationals are ``7`` or ``3/2``.  Negative exponents need
``laurent`` mode.  Printing lists terms in descending deglex order with an
explicit ``*`` so that the output re-parses to the same value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .exact_algebra import Poly, RatFn, _norm

MODES = ("poly", "laurent", "ratfn")
MAX_EXPONENT = 2 ** 63 - 1


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.message = message
        self.line = line
        self.column = col
        super().__init__(f"{message} at line {line}, column {col}")


# AST

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Add:
    # (sign, term) pairs, sign in {1, -1}
    terms: tuple


@dataclass(frozen=True)
class Ratio:
    num: object
    den: object


@dataclass
class Expression:
    """Parsed text: the syntax tree plus its normalized value."""
    ast: object
    mode: str
    nvars: int
    prefix: str
    value: Union[Poly, RatFn] = field(repr=False)

    def format(self) -> str:
        return format_expr(self.value, self.prefix)


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<var>[tx]\d+)
  | (?P<op>[-+*^():])
""", re.VERBOSE)


def _tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, mode: str):
        self.text = text
        self.mode = mode
        self.toks = _tokenize(text)
        self.i = 0
        self.prefixes = set()
        self.max_index = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None):
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            self.fail(f"expected {value!r}")
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        found = tok[1] or "end of input"
        raise ParseError(f"{msg}, found {found!r}", self.text, tok[2])

    def parse(self):
        node = self.expr()
        if self.peek()[1] == ":":
            if self.mode != "ratfn":
                self.fail("':' is only allowed in ratfn mode")
            self.take(":")
            den = self.expr()
            node = Ratio(node, den)
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return node

    def expr(self):
        terms = []
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        terms.append((sign, self.term()))
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Add(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self.peek()[1] == "*":
            self.take("*")
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            p, _, q = val.partition("/")
            if q and int(q) == 0:
                raise ParseError("zero denominator in rational literal", self.text, pos)
            return Num(Fraction(int(p), int(q) if q else 1))
        if kind == "var":
            self.take()
            self.prefixes.add(val[0])
            if len(self.prefixes) > 1:
                raise ParseError("mixed variable prefixes t and x", self.text, pos)
            idx = int(val[1:])
            if idx < 1:
                raise ParseError("variable indices start at 1", self.text, pos)
            self.max_index = max(self.max_index, idx)
            node = Var(idx)
            return self.maybe_power(node)
        if val == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return self.maybe_power(node, paren=True)
        self.fail("expected a number, variable or '('")

    def maybe_power(self, node, paren=False):
        if self.peek()[1] != "^":
            return node
        self.take("^")
        sign = 1
        if self.peek()[1] == "-":
            self.take("-")
            sign = -1
        kind, val, pos = self.peek()
        if kind != "num" or "/" in val:
            self.fail("expected an integer exponent")
        self.take()
        exp = sign * int(val)
        if abs(exp) > MAX_EXPONENT:
            raise ParseError("exponent out of machine-word range", self.text, pos)
        if exp < 0 and self.mode != "laurent":
            raise ParseError("negative exponent outside laurent mode", self.text, pos)
        if exp < 0 and paren:
            raise ParseError("negative power of a parenthesized expression", self.text, pos)
        return Pow(node, exp)


def _evaluate(node, nvars: int, laurent: bool):
    if isinstance(node, Num):
        return Poly.const(node.value, nvars, laurent)
    if isinstance(node, Var):
        return Poly.var(node.index, nvars, laurent)
    if isinstance(node, Pow):
        base = _evaluate(node.base, nvars, laurent)
        return base ** node.exp
    if isinstance(node, Mul):
        out = _evaluate(node.factors[0], nvars, laurent)
        for f in node.factors[1:]:
            out = out * _evaluate(f, nvars, laurent)
        return out
    if isinstance(node, Add):
        out = Poly(nvars, {}, laurent)
        for sign, t in node.terms:
            v = _evaluate(t, nvars, laurent)
            out = out + v if sign == 1 else out - v
        return out
    raise TypeError(f"unexpected node {node!r}")


def parse_expression(text: str, mode: str = "poly", nvars: int | None = None) -> Expression:
    """Parse text into an :class:`Expression`.

    ``nvars`` defaults to the largest variable index used (at least 1).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    p = _Parser(text, mode)
    ast = p.parse()
    n = nvars if nvars is not None else max(p.max_index, 1)
    if p.max_index > n:
        raise ParseError(f"variable index {p.max_index} exceeds {n} variables", text, 0)
    prefix = next(iter(p.prefixes)) if p.prefixes else "t"
    laurent = mode == "laurent"
    if isinstance(ast, Ratio):
        num = _evaluate(ast.num, n, False)
        den = _evaluate(ast.den, n, False)
        if den.is_zero():
            raise ParseError("zero denominator", text, len(text))
        value = RatFn(num, den)
    else:
        value = _evaluate(ast, n, laurent)
        if mode == "ratfn":
            value = RatFn(value)
    return Expression(ast, mode, n, prefix, value)


def parse_poly(text: str, nvars: int | None = None, laurent: bool = False) -> Poly:
    return parse_expression(text, "laurent" if laurent else "poly", nvars).value


def parse_ratfn(text: str, nvars: int | None = None) -> RatFn:
    """Rational function; Laurent monomials are accepted and cleared."""
    if ":" in text:
        return parse_expression(text, "ratfn", nvars).value
    v = parse_expression(text, "laurent", nvars).value
    return laurent_to_ratfn(v)


def laurent_to_ratfn(p: Poly) -> RatFn:
    """Write a Laurent polynomial as polynomial / monomial."""
    lo = p.monomial_content()
    shift = tuple(max(-x, 0) for x in lo)
    num = p.mul_monomial(shift).as_polynomial()
    den = Poly(p.nvars, {shift: 1})
    return RatFn(num, den)


# printing

def _fmt_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_monomial(e, prefix: str) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 0:
            continue
        v = f"{prefix}{i + 1}"
        parts.append(v if k == 1 else f"{v}^{k}")
    return "*".join(parts)


def format_poly(p: Poly, prefix: str = "t") -> str:
    if p.is_zero():
        return "0"
    order = sorted(p.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)
    out = []
    for k, (e, c) in enumerate(order):
        neg = c < 0
        a = -c if neg else c
        mono = _fmt_monomial(e, prefix)
        if not mono:
            body = _fmt_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_rational(a)}*{mono}"
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_expr(value, prefix: str = "t") -> str:
    if isinstance(value, Poly):
        return format_poly(value, prefix)
    if isinstance(value, RatFn):
        if value.den == 1:
            return format_poly(value.num, prefix)
        return f"({format_poly(value.num, prefix)}):({format_poly(value.den, prefix)})"
    if isinstance(value, Expression):
        return value.format()
    raise TypeError(f"cannot format {type(value).__name__}")
