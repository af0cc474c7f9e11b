"""Parsers for field specifications, commutative polynomials and
noncommutative expressions.

Field specs: ``QQ`` or ``GF(p)`` followed by ``.ext(poly)`` /
``.ext(poly, name)`` steps and an optional ``.rho``; polynomials are in
``T`` and may use earlier generator names.  Expressions use ``+ - * / ^``,
parentheses, integers and named constants; the noncommutative parser also
reads juxtaposition as a product and knows ``star(...)`` and
``comm(m, n, k)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .commpoly import CommPoly
from .errors import ParseError, PreconditionError
from .fieldtower import (QQ, Field, FieldElement, FieldError, GF, adjoin_rho, extend, find_irreducible)
from .ncalg import NCPoly, star_product

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^(),]))")


@dataclass
class Token:
    kind: str      # "num", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(Token("num", m.group(1), start))
        elif m.group(2):
            out.append(Token("name", m.group(2), start))
        else:
            op = m.group(3)
            out.append(Token("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(Token("end", "", n))
    return out


class ExprParser:
    """Recursive-descent parser over values supporting ``+ - *`` and integer powers.

    ``resolve(name)`` maps identifiers to values; ``functions`` maps names of
    call-style forms to handlers receiving the parser positioned after ``(``.
    """

    def __init__(self, text: str, field: Field, resolve: Callable[[str], object],
                 juxtaposition: bool = False, functions: Mapping[str, Callable] | None = None):
        self.text = text
        self.field = field
        self.resolve = resolve
        self.juxtaposition = juxtaposition
        self.functions = dict(functions or {})
        self.tokens = tokenize(text)
        self.i = 0

    # token helpers ----------------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, msg: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(msg, self.text, tok.pos)

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str) -> None:
        if not self.accept(op):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {op!r} but found {found!r}")

    def parse(self):
        value = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return value

    # grammar ------------------------------------------------------------------
    def expr(self):
        value = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_factor(self) -> bool:
        t = self.tok
        return t.kind in ("num", "name") or (t.kind == "op" and t.text == "(")

    def term(self):
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.tok.kind == "op" and self.tok.text == "/":
                tok = self.tok
                self.i += 1
                value = self._divide(value, self.unary(), tok)
            elif self.juxtaposition and self._starts_factor():
                value = value * self.power()
            else:
                return value

    def unary(self):
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            tok = self.tok
            self.i += 1
            neg = self.accept("-")
            if self.tok.kind != "num":
                raise self.error("exponent must be an integer")
            n = int(self.tok.text)
            self.i += 1
            if neg:
                scalar = self._as_scalar(base)
                if scalar is None or scalar.is_zero():
                    raise self.error("negative powers are allowed only for nonzero scalars", tok)
                return scalar ** (-n)
            return base ** n
        return base

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return self.field(int(t.text))
        if t.kind == "name":
            self.i += 1
            if self.tok.kind == "op" and self.tok.text == "(" and t.text in self.functions:
                self.i += 1
                return self.functions[t.text](self, t)
            try:
                return self.resolve(t.text)
            except KeyError:
                raise self.error(f"unknown name {t.text!r}", t) from None
        if self.accept("("):
            value = self.expr()
            self.expect(")")
            return value
        found = t.text or "end of input"
        raise self.error(f"unexpected {found!r}")

    # helpers ------------------------------------------------------------------
    def _as_scalar(self, value) -> FieldElement | None:
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, CommPoly):
            return value.coefficient((0,) * len(value.names)) if value.total_degree() <= 0 else None
        if isinstance(value, NCPoly):
            return value.constant() if value.is_constant() else None
        return None

    def _divide(self, num, den, tok: Token):
        d = self._as_scalar(den)
        if d is None:
            raise self.error("division by a non-scalar", tok)
        if d.is_zero():
            raise self.error("division by zero", tok)
        if isinstance(num, FieldElement):
            return num / d
        return num * d.inverse()

    def integer(self) -> int:
        neg = self.accept("-")
        if self.tok.kind != "num":
            raise self.error("expected an integer")
        n = int(self.tok.text)
        self.i += 1
        return -n if neg else n


# ---------------------------------------------------------------------------
# field specs
# ---------------------------------------------------------------------------

def constants_resolver(field: Field, extra: Mapping[str, object] | None = None) -> Callable[[str], object]:
    names = field.generator_names()
    extra = dict(extra or {})

    def resolve(name: str):
        if name in extra:
            return extra[name]
        if name in names:
            return names[name]
        raise KeyError(name)
    return resolve


def parse_scalar(text: str, field: Field, extra: Mapping[str, object] | None = None) -> FieldElement:
    value = ExprParser(text, field, constants_resolver(field, extra)).parse()
    if not isinstance(value, FieldElement):
        raise ParseError(f"{text!r} is not a scalar")
    return field(value)


def parse_univariate(text: str, field: Field, var: str = "T") -> list[FieldElement]:
    """Coefficients (lowest first) of a polynomial in ``var`` over ``field``."""
    poly = parse_poly(text, field, (var,))
    return poly.univariate(var)


def _prime_power(q: int) -> tuple[int | None, int]:
    if q < 2:
        return None, 0
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else (None, 0)


def parse_field(spec: str) -> Field:
    """Parse ``QQ``, ``GF(p)`` (or ``GF(p^k)``, ``GF(9)``) and ``.ext(...)`` / ``.rho`` suffixes."""
    text = spec.strip()
    m = re.match(r"(QQ|Q|GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\))", text)
    if not m:
        raise ParseError("field spec must start with QQ or GF(q)", spec, 0)
    if m.group(2):
        q = int(m.group(2)) ** int(m.group(3) or 1)
        p, k = _prime_power(q)
        if p is None:
            raise ParseError(f"{q} is not a prime power", spec, m.start(2))
        K: Field = GF(p)
        if k > 1:
            K = extend(K, find_irreducible(K, k), "g")
    else:
        K = QQ
    pos = m.end()
    while pos < len(text):
        if text[pos] != ".":
            raise ParseError("expected '.'", spec, pos)
        pos += 1
        if text.startswith("rho", pos) and not text[pos + 3:pos + 4].isalnum():
            try:
                K = adjoin_rho(K)
            except FieldError as exc:
                raise ParseError(str(exc), spec, pos) from None
            pos += 3
            continue
        if text.startswith("ext(", pos):
            depth, j = 1, pos + 4
            while j < len(text) and depth:
                depth += {"(": 1, ")": -1}.get(text[j], 0)
                j += 1
            if depth:
                raise ParseError("unbalanced parentheses", spec, pos)
            body = text[pos + 4:j - 1]
            name = None
            if "," in body:
                body, name = body.rsplit(",", 1)
                name = name.strip()
                if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                    raise ParseError(f"bad generator name {name!r}", spec, pos)
            try:
                coeffs = parse_univariate(body, K)
                K = extend(K, coeffs, name)
            except ParseError as exc:
                raise ParseError(f"in extension polynomial: {exc}", spec, pos + 4) from None
            except FieldError as exc:
                raise ParseError(str(exc), spec, pos) from None
            pos = j
            continue
        raise ParseError("expected 'rho' or 'ext(...)'", spec, pos)
    return K


def extend_field(K: Field, spec: str) -> Field:
    """``[name=]poly(T)``: adjoin a root of a polynomial in T (default name ``a``)."""
    name = "a"
    if "=" in spec:
        name, spec = (s.strip() for s in spec.split("=", 1))
    try:
        return extend(K, parse_univariate(spec, K), name)
    except FieldError as exc:
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# commutative polynomials and Phi
# ---------------------------------------------------------------------------

def parse_poly(text: str, field: Field, names, extra: Mapping[str, object] | None = None) -> CommPoly:
    names = tuple(names)
    variables = {n: CommPoly.variable(field, names, n) for n in names}
    consts = constants_resolver(field, extra)

    def resolve(name: str):
        if name in variables:
            return variables[name]
        return consts(name)

    value = ExprParser(text, field, resolve).parse()
    if isinstance(value, FieldElement):
        return CommPoly.constant(field, names, value)
    return value


_XVAR = re.compile(r"X(\d+)$")


def phi_variables(text: str, field: Field) -> tuple[str, ...]:
    """The X-variables used in a Phi expression: (X, Y) or X1..Xn."""
    consts = set(field.generator_names())
    names = {t.text for t in tokenize(text) if t.kind == "name" and t.text not in consts}
    names.discard("Z")
    indexed = sorted((int(m.group(1)) for n in names if (m := _XVAR.match(n))))
    if indexed:
        if names - {f"X{i}" for i in indexed}:
            raise ParseError(f"mixed variable styles: {sorted(names)}")
        n = max(indexed)
        return tuple(f"X{i}" for i in range(1, n + 1))
    unknown = names - {"X", "Y"}
    if unknown:
        raise ParseError(f"unknown names {sorted(unknown)}; use Z with X, Y or X1..Xn")
    return ("X", "Y")


def parse_phi_general(text: str, field: Field):
    """Read ``Z^d - sum f_k Z^(d-k)`` into a GeneralPresentation."""
    from .repcheck import GeneralPresentation
    xs = phi_variables(text, field)
    names = ("Z",) + xs
    phi = parse_poly(text, field, names)
    d = phi.degree_in("Z")
    if d < 1:
        raise ParseError("Phi must involve Z")
    lead = phi.coefficient_in("Z", d)
    if lead != CommPoly.constant(field, names, 1):
        raise ParseError(f"Phi is not monic in Z (coefficient of Z^{d} is {lead})")
    f = []
    for k in range(1, d + 1):
        c = -phi.coefficient_in("Z", d - k)
        fk = CommPoly(field, xs, {e[1:]: v for e, v in c.terms.items()})
        if not fk.is_homogeneous(k):
            raise ParseError(f"f_{k} = {fk} is not homogeneous of degree {k}")
        f.append(fk)
    return GeneralPresentation(d, len(xs), f, field)


def parse_phi(text: str, field: Field):
    """A CubicPresentation (char != 3), Char3Presentation (char 3) or GeneralPresentation."""
    gp = parse_phi_general(text, field)
    if gp.d == 3 and gp.names == ("X", "Y"):
        return cubic_from_general(gp)
    return gp


def cubic_from_general(gp):
    from .cubic3_char0 import CubicPresentation
    from .cubic3_char3 import char3_from_coeffs, normalize_char3
    K = gp.field
    f1, f2, f3 = gp.f
    c = lambda p, e: p.coefficient(e)
    if K.characteristic == 3:
        if not f1.is_zero():
            raise PreconditionError("the characteristic-3 family has no Z^2 term (f1 must be 0)")
        if not c(f2, (2, 0)).is_zero() or not c(f2, (0, 2)).is_zero():
            return normalize_char3(gp)
        return char3_from_coeffs(K, c(f2, (1, 1)), c(f3, (3, 0)), c(f3, (2, 1)), c(f3, (1, 2)), c(f3, (0, 3)))
    if not c(f1, (1, 0)).is_zero():
        raise PreconditionError("outside the implemented family: f1 must be a multiple of Y (no X*Z^2 term)")
    if not c(f2, (2, 0)).is_zero():
        raise PreconditionError("outside the implemented family: f2 must not contain X^2")
    return CubicPresentation(K, c(f1, (0, 1)), c(f2, (0, 2)), c(f2, (1, 1)),
                             c(f3, (3, 0)), c(f3, (2, 1)), c(f3, (1, 2)), c(f3, (0, 3)))


def format_phi(pres) -> str:
    """Text that parses back to the same presentation."""
    gp = pres if hasattr(pres, "phi_poly") and not hasattr(pres, "general") else pres.general()
    return str(gp.phi_poly())


# ---------------------------------------------------------------------------
# noncommutative expressions
# ---------------------------------------------------------------------------

def _star_form(parser: ExprParser, tok: Token):
    factors = []
    while True:
        base = parser.atom()
        mult = 1
        if parser.accept("^"):
            mult = parser.integer()
            if mult < 1:
                raise parser.error("star multiplicities must be positive", tok)
        factors.append((base, mult))
        if parser.accept(")"):
            break
        parser.expect(",")
    return star_product(factors)


def _comm_form(parser: ExprParser, tok: Token):
    mu = parser.expr()
    parser.expect(",")
    nu = parser.expr()
    parser.expect(",")
    k = parser.integer()
    parser.expect(")")
    if k < 0:
        raise parser.error("commutator depth must be nonnegative", tok)
    value = mu
    for _ in range(k):
        value = nu * value - value * nu
    return value


def parse_nc(text: str, ring, macros: Mapping[str, object] | None = None,
             scalars: Mapping[str, object] | None = None) -> NCPoly:
    gens = {n: ring.gen(n) for n in ring.names}
    macros = dict(macros or {})
    consts = constants_resolver(ring.field, scalars)

    def resolve(name: str):
        if name in gens:
            return gens[name]
        if name in macros:
            return macros[name]
        return consts(name)

    value = ExprParser(text, ring.field, resolve, juxtaposition=True,
                       functions={"star": _star_form, "comm": _comm_form}).parse()
    if isinstance(value, FieldElement):
        return ring.scalar(value)
    return value


def parse_point(text: str, field: Field) -> list[FieldElement]:
    parts = _split_top(text)
    return [parse_scalar(p, field) for p in parts]


def _split_top(text: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
            continue
        depth += {"(": 1, ")": -1}.get(ch, 0)
        cur.append(ch)
    out.append("".join(cur))
    return [p.strip() for p in out]


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}") from None
