"""Degree-d symbol algebras given by structure constants.

Two kinds are supported, both with basis ``u^i v^j`` (0 <= i, j < d):

* ``root_of_unity``: ``u^d = a``, ``v^d = b``, ``v u = rho u v``;
* ``artin_schreier`` (d = characteristic): ``u^d = u + a``, ``v^d = b``,
  ``v u = (u + 1) v``.

The module also builds the homomorphism from the cubic Clifford algebra
into ``(alpha, S)_3`` over the function field of its curve, used as an
independent oracle for the rewriting engine.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import PreconditionError
from .fieldtower import (Field, FieldElement, RationalFunctionField, SimpleExtension,
                         pdivmod, pgcd, pmul)
from .matrices import Matrix
from .ncalg import AlgebraContext, NCPoly

ROOT_OF_UNITY = "root_of_unity"
ARTIN_SCHREIER = "artin_schreier"


def _poly_mul_reduce(K: Field, f: list, g: list, d: int, kind: str, a) -> list:
    """Multiply polynomials in u (raw coefficient lists of length d) and reduce."""
    prod = [K.zero] * (2 * d - 1)
    for i, x in enumerate(f):
        if x == K.zero:
            continue
        for j, y in enumerate(g):
            if y != K.zero:
                prod[i + j] = K.add(prod[i + j], K.mul(x, y))
    for k in range(2 * d - 2, d - 1, -1):
        c = prod[k]
        if c == K.zero:
            continue
        prod[k] = K.zero
        # u^k = u^(k-d) * u^d
        prod[k - d] = K.add(prod[k - d], K.mul(c, a))
        if kind == ARTIN_SCHREIER:
            prod[k - d + 1] = K.add(prod[k - d + 1], c)
    return prod[:d]


class SymbolAlgebraSpec:
    """A symbol algebra ``(a, b)_{d,K}`` or ``[a, b)_{d,K}``."""

    def __init__(self, kind: str, degree: int, a, b, field: Field):
        if kind not in (ROOT_OF_UNITY, ARTIN_SCHREIER):
            raise ValueError(f"unknown symbol kind {kind!r}")
        self.kind = kind
        self.degree = degree
        self.field = field
        self.a = field(a)
        self.b = field(b)
        p = field.characteristic
        if kind == ROOT_OF_UNITY:
            rho = field.rho if degree == 3 else None
            if rho is None:
                raise PreconditionError(f"{field.name} lacks a primitive {degree}rd root of unity")
            if p and degree % p == 0:
                raise PreconditionError("characteristic divides the degree")
            if self.a.is_zero() or self.b.is_zero():
                raise PreconditionError("symbol parameters must be nonzero")
            self.rho = rho
        else:
            if p != degree:
                raise PreconditionError(
                    f"Artin-Schreier symbols of degree {degree} need characteristic {degree}")
            self.rho = None
        self._table = self._build_table()

    @classmethod
    def cyclic(cls, a, b, field: Field) -> SymbolAlgebraSpec:
        return cls(ROOT_OF_UNITY, 3, a, b, field)

    @classmethod
    def artin_schreier(cls, a, b, field: Field) -> SymbolAlgebraSpec:
        return cls(ARTIN_SCHREIER, field.characteristic, a, b, field)

    def __eq__(self, other):
        if not isinstance(other, SymbolAlgebraSpec):
            return NotImplemented
        return (self.kind, self.degree, self.field, self.a, self.b) == (
            other.kind, other.degree, other.field, other.a, other.b)

    def __hash__(self):
        return hash((self.kind, self.degree, self.a, self.b))

    def _build_table(self):
        """table[j][k]: coefficients of ``v^j u^k`` as a polynomial in u (times v^j)."""
        K, d = self.field, self.degree
        a = self.a.raw
        table = []
        for j in range(d):
            row = []
            for k in range(d):
                if self.kind == ROOT_OF_UNITY:
                    poly = [K.zero] * d
                    poly[k] = (self.rho ** (j * k)).raw
                else:
                    # v^j u = (u + j) v^j
                    base = [K.zero] * d
                    base[0] = K.from_int(j)
                    base[1] = K.add(base[1], K.one)
                    poly = [K.one] + [K.zero] * (d - 1)
                    for _ in range(k):
                        poly = _poly_mul_reduce(K, poly, base, d, self.kind, a)
                row.append(poly)
            table.append(row)
        return table

    def index(self, i: int, j: int) -> int:
        return i * self.degree + j

    def _basis_product(self, i: int, j: int, k: int, l: int) -> list:
        """Raw coefficient vector of ``(u^i v^j)(u^k v^l)``."""
        K, d = self.field, self.degree
        upoly = [K.zero] * d
        upoly[i] = K.one
        upoly = _poly_mul_reduce(K, upoly, self._table[j][k], d, self.kind, self.a.raw)
        vpow = j + l
        scale = K.one
        if vpow >= d:
            vpow -= d
            scale = self.b.raw
        out = [K.zero] * (d * d)
        for m, c in enumerate(upoly):
            if c != K.zero:
                out[m * d + vpow] = K.mul(c, scale)
        return out

    def element(self, coeffs: Sequence) -> SymbolElement:
        return SymbolElement(self, tuple(self.field(c) for c in coeffs))

    def basis(self, i: int, j: int) -> SymbolElement:
        vec = [0] * (self.degree ** 2)
        vec[self.index(i, j)] = 1
        return self.element(vec)

    def one(self) -> SymbolElement:
        return self.basis(0, 0)

    def zero(self) -> SymbolElement:
        return self.element([0] * self.degree ** 2)

    def scalar(self, c) -> SymbolElement:
        return self.one() * self.field(c)

    def u(self) -> SymbolElement:
        return self.basis(1, 0)

    def v(self) -> SymbolElement:
        return self.basis(0, 1)

    def render(self, field_name: str | None = None) -> str:
        name = field_name or self.field.name
        open_ = "(" if self.kind == ROOT_OF_UNITY else "["
        return f"{open_}{self.a}, {self.b})_{{{self.degree}, {name}}}"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"SymbolAlgebraSpec({self.render()})"

    def to_json(self) -> dict:
        return {"kind": self.kind, "degree": self.degree, "a": str(self.a), "b": str(self.b),
                "field": self.field.name, "rendered": self.render()}


class SymbolElement:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: SymbolAlgebraSpec, coeffs: tuple):
        if len(coeffs) != spec.degree ** 2:
            raise ValueError("coefficient vector has the wrong length")
        self.spec = spec
        self.coeffs = coeffs

    def _check(self, other: SymbolElement) -> None:
        if other.spec is not self.spec and other.spec != self.spec:
            raise ValueError("elements of different symbol algebras")

    def __add__(self, other):
        if isinstance(other, SymbolElement):
            self._check(other)
            return SymbolElement(self.spec, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return self + self.spec.scalar(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return SymbolElement(self.spec, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymbolElement):
            self._check(other)
            spec = self.spec
            K, d = spec.field, spec.degree
            out = [K.zero] * (d * d)
            for m, x in enumerate(self.coeffs):
                if x.is_zero():
                    continue
                i, j = divmod(m, d)
                for n, y in enumerate(other.coeffs):
                    if y.is_zero():
                        continue
                    k, l = divmod(n, d)
                    c = K.mul(x.raw, y.raw)
                    for idx, b in enumerate(spec._basis_product(i, j, k, l)):
                        if b != K.zero:
                            out[idx] = K.add(out[idx], K.mul(c, b))
            return SymbolElement(spec, tuple(FieldElement(K, r) for r in out))
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            c = self.spec.field(other)
            return SymbolElement(self.spec, tuple(c * x for x in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.spec.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, SymbolElement):
            return self.spec == other.spec and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return self == self.spec.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def scalar_value(self) -> FieldElement | None:
        if all(c.is_zero() for c in self.coeffs[1:]):
            return self.coeffs[0]
        return None

    def coefficient(self, i: int, j: int) -> FieldElement:
        return self.coeffs[self.spec.index(i, j)]

    def regular_rep(self) -> Matrix:
        """Matrix of left multiplication in the ``u^i v^j`` basis (columns are images)."""
        spec = self.spec
        n = spec.degree ** 2
        cols = []
        for m in range(n):
            vec = [0] * n
            vec[m] = 1
            cols.append((self * spec.element(vec)).coeffs)
        return Matrix(spec.field, [[cols[c][r] for c in range(n)] for r in range(n)])

    def inverse(self) -> SymbolElement:
        n = self.spec.degree ** 2
        rhs = [1] + [0] * (n - 1)
        sol = self.regular_rep().solve(rhs)
        if sol is None:
            raise ZeroDivisionError("element is not invertible")
        return self.spec.element(sol)

    def __str__(self):
        d = self.spec.degree
        terms = []
        for m, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            i, j = divmod(m, d)
            mon = "*".join(p for p in ((("u" if i == 1 else f"u^{i}") if i else ""),
                                       (("v" if j == 1 else f"v^{j}") if j else "")) if p)
            cs = str(c)
            if not mon:
                terms.append(f"({cs})" if " " in cs else cs)
            elif c.is_one():
                terms.append(mon)
            else:
                terms.append(f"({cs})*{mon}")
        return " + ".join(terms) or "0"

    def __repr__(self):
        return f"SymbolElement({self})"


class SymbolContext(AlgebraContext):
    def __init__(self, spec: SymbolAlgebraSpec):
        self.spec = spec
        self.field = spec.field

    def one(self):
        return self.spec.one()

    def as_scalar(self, a: SymbolElement):
        return a.scalar_value()


# ---------------------------------------------------------------------------
# the function-field homomorphism
# ---------------------------------------------------------------------------

@dataclass
class PhiMap:
    """Images of ``x, y1, y2`` in ``(alpha, S)_3`` over the curve's function field."""

    spec: SymbolAlgebraSpec
    function_field: SimpleExtension
    R: FieldElement
    S: FieldElement
    images: dict = dc_field(default_factory=dict)

    def apply(self, p: NCPoly) -> SymbolElement:
        return p.evaluate(self.images, self.spec.one())


def curve_function_field(F: Field, s_coeffs: Sequence) -> tuple[SimpleExtension, FieldElement, FieldElement]:
    """``F(R)[S]/(S^2 + c1 S + c0)`` given ``[c0, c1]`` as polynomials in R (raw tuples over F).

    The quadratic is irreducible whenever ``c0`` has degree 3 (no rational
    root can balance the degrees), which holds for every cubic presentation
    with nonzero alpha; irreducibility is therefore asserted, not tested.
    """
    K0 = RationalFunctionField(F, "R")
    one = (F.one,)
    c0, c1 = (FieldElement(K0, (tuple(c), one) if c else K0.zero) for c in s_coeffs)
    FE = SimpleExtension(K0, [c0, c1, K0.one_element()], "S", check=False)
    return FE, FE(K0.gen), FE.gen


def phi_map(pres) -> PhiMap:
    """Build the oracle homomorphism for a characteristic-not-3 cubic presentation.

    ``pres`` must provide ``field``, ``alpha``, ``e``, ``invariants()`` and
    ``curve_s_coefficients()`` (the curve as a monic quadratic in S).
    """
    F = pres.field
    if F.characteristic == 3:
        raise PreconditionError("the function-field oracle needs characteristic not 3")
    if pres.alpha.is_zero():
        raise PreconditionError("alpha must be nonzero")
    rho = F.rho
    if rho is None:
        raise PreconditionError("the field must contain a primitive cube root of unity")
    inv = pres.invariants()
    FE, R, S = curve_function_field(F, pres.curve_s_coefficients())
    spec = SymbolAlgebraSpec.cyclic(FE(pres.alpha), S, FE)
    u, v = spec.u(), spec.v()
    alpha = pres.alpha
    u_inv = u * u * alpha.inverse()
    v_inv = v * v * S.inverse()
    inner = (spec.scalar(R) - u * (rho ** 2 * inv.D1 / (3 * alpha))
             - u_inv * (inv.D2 / (9 * alpha)))
    y2 = u * inner * v_inv
    return PhiMap(spec, FE, R, S, {"x": u, "y1": v, "y2": y2})


def f_coordinate_rank(elements: Sequence[SymbolElement]) -> int:
    """Rank over the constants F of symbol elements with coefficients in F(R)[S]/(q).

    Denominators in R are cleared by a common multiple; every coefficient
    then expands to F-coordinates indexed by (basis position, S-power,
    R-power).
    """
    if not elements:
        return 0
    FE = elements[0].spec.field
    K0 = FE.base
    F = K0.base
    lcm = (F.one,)
    for el in elements:
        for c in el.coeffs:
            for part in c.raw:
                den = part[1]
                g = pgcd(F, lcm, den)
                lcm = pmul(F, lcm, pdivmod(F, den, g)[0])
    rows = []
    for el in elements:
        row: dict = {}
        for pos, c in enumerate(el.coeffs):
            for sdeg, (num, den) in enumerate(c.raw):
                if not num:
                    continue
                poly = pmul(F, num, pdivmod(F, lcm, den)[0])
                for rdeg, coef in enumerate(poly):
                    if coef != F.zero:
                        row[(pos, sdeg, rdeg)] = coef
        rows.append(row)
    keys = sorted({k for r in rows for k in r})
    if not keys:
        return 0
    mat = Matrix._raw(F, tuple(tuple(FieldElement(F, r.get(k, F.zero)) for k in keys) for r in rows))
    return mat.rank()
