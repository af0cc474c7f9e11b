"""Plane affine curves in two coordinates, their points and singularity reports."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Sequence

from .commpoly import CommPoly
from .errors import PreconditionError
from .fieldtower import (Field, FieldElement, extend, find_irreducible, pderiv, pgcd,
                         pmul, poly_str, pscale, psub, ptrim)


@dataclass
class SmoothnessReport:
    smooth: bool | None
    method: str
    detail: str = ""
    singular_points: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {"smooth": self.smooth, "method": self.method, "detail": self.detail,
                "singular_points": [[str(c) for c in p] for p in self.singular_points]}


@dataclass
class CurveModel:
    """``poly(first, second) = 0``; for the curves here the polynomial is monic quadratic in the second name."""

    poly: CommPoly
    label: str = "E"

    @property
    def field(self) -> Field:
        return self.poly.field

    @property
    def names(self) -> tuple:
        return self.poly.names

    def __str__(self):
        return f"{self.poly} = 0"

    def to_json(self) -> dict[str, str]:
        return self.poly.to_json()

    def contains(self, coords: Sequence) -> bool:
        return self.value(coords).is_zero()

    def value(self, coords: Sequence) -> FieldElement:
        L = _common_field([self.field] + [c.field for c in coords if isinstance(c, FieldElement)])
        vals = [L(c) for c in coords]
        return L(self.poly.lift(L).evaluate(vals))

    def point(self, coords: Sequence) -> CurvePoint:
        if len(coords) != 2:
            raise PreconditionError("a curve point needs two coordinates")
        L = _common_field([self.field] + [c.field for c in coords if isinstance(c, FieldElement)])
        vals = tuple(L(c) for c in coords)
        v = self.value(vals)
        if not v.is_zero():
            raise PreconditionError(
                f"({vals[0]}, {vals[1]}) is not on {self.label}: the equation evaluates to {v}")
        return CurvePoint(self, vals, L)

    def s_coefficients(self) -> tuple[tuple, tuple, tuple]:
        """Raw coefficient tuples (in the first variable) of second^0, second^1, second^2."""
        first, second = self.names
        if self.poly.degree_in(second) != 2:
            raise ValueError("curve is not quadratic in its second variable")
        K = self.field
        out = []
        for k in range(3):
            c = self.poly.coefficient_in(second, k)
            coeffs = [K.zero] * (max(c.degree_in(first), 0) + 1)
            for e, v in c.terms.items():
                coeffs[e[0]] = v.raw
            out.append(ptrim(K, coeffs))
        return tuple(out)

    def smoothness(self, search_limit: int = 27) -> SmoothnessReport:
        """Exact criterion for ``s^2 + b(r) s + c(r)`` in characteristic not 2.

        Such a curve is singular over the algebraic closure exactly when
        ``h = b^2 - 4c`` has a repeated root there, i.e. ``gcd(h, h') != 1``.
        Over a finite base, singular points in extensions of size at most
        ``search_limit`` are also listed by exhaustive search.
        """
        K = self.field
        report = SmoothnessReport(None, "undetermined")
        try:
            c0, c1, c2 = self.s_coefficients()
        except ValueError:
            c0 = c1 = c2 = None
        if c2 == (K.one,) and K.characteristic != 2:
            h = psub(K, pmul(K, c1, c1), pscale(K, K.from_int(4), c0))
            if not h:
                report = SmoothnessReport(False, "discriminant-gcd", "b^2 - 4c vanishes identically")
            elif len(h) == 1:
                report = SmoothnessReport(True, "discriminant-gcd", "b^2 - 4c is a nonzero constant")
            else:
                g = pgcd(K, h, pderiv(K, h))
                smooth = len(g) == 1
                report = SmoothnessReport(
                    smooth, "discriminant-gcd",
                    f"gcd(h, h') = {poly_str(K, g, self.names[0])} for h = {poly_str(K, h, self.names[0])}")
        if K.order() is not None:
            pts = self.singular_points(search_limit)
            report.singular_points = pts
            if report.smooth is None:
                report.method = "exhaustive search"
                report.smooth = False if pts else None
            report.detail += ("; " if report.detail else "") + \
                f"{len(pts)} singular point(s) over fields of size <= {search_limit}"
        return report

    def singular_points(self, search_limit: int = 27) -> list[tuple]:
        K = self.field
        q = K.order()
        pts: list[tuple] = []
        if q is None:
            return pts
        k = 1
        while q ** k <= search_limit:
            L = K if k == 1 else extend(K, find_irreducible(K, k), f"g{k}")
            F = self.poly.lift(L)
            partials = [F.partial(n) for n in F.names]
            for pt in product(list(L.elements()), repeat=2):
                if F.evaluate(pt).is_zero() and all(p.evaluate(pt).is_zero() for p in partials):
                    if not any(all(a == b for a, b in zip(pt, old)) for old in pts):
                        pts.append(pt)
            k += 1
        return pts


@dataclass
class CurvePoint:
    """A point of a curve over an extension of its field.

    ``curve`` is None for the one-coordinate parameter points used when the
    center is a polynomial ring in one variable.
    """

    curve: CurveModel | None
    coords: tuple
    field: Field

    @classmethod
    def scalar(cls, value: FieldElement) -> CurvePoint:
        return cls(None, (value,), value.field)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> dict:
        return {"coords": [str(c) for c in self.coords], "field": self.field.name}


def _common_field(fields: Sequence[Field]) -> Field:
    top = fields[0]
    for K in fields[1:]:
        if K.contains_field(top):
            top = K
        elif not top.contains_field(K):
            raise PreconditionError(f"fields {top.name} and {K.name} are not in one tower")
    return top
