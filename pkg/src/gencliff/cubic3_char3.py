"""Cubic Clifford algebras in characteristic 3.

``Phi = Z^3 - eXYZ - (aX^3 + bX^2Y + cXY^2 + dY^3)`` with ``a = alpha != 0``.

* ``e = 0``: x is 3-central and ``y = y2 - y1`` with ``[x, y2] = y1``,
  ``[x, y1] = beta``; the center is governed by ``Delta`` and the curve
  ``s^2 = r^3 + Delta``.
* ``e != 0``: a linear change of variables brings ``f2`` to ``X^2 - Y^2``;
  then x is Artin-Schreier, ``y = -beta + y1 + y2`` with
  ``y_k x - x y_k = k y_k``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .checks import CheckReport
from .commpoly import CommPoly
from .curves import CurveModel, CurvePoint
from .errors import PreconditionError
from .fieldtower import Field, FieldElement
from .matrices import Matrix
from .ncalg import (NCPoly, NCRing, QuotientContext, RewriteSystem, decompose_artin_schreier,
                    decompose_pcentral)
from .repcheck import GeneralPresentation
from .symbolalg import SymbolAlgebraSpec

E_ZERO = "e_zero"
E_NONZERO = "e_nonzero"


@dataclass
class Char3Presentation:
    field: Field
    branch: str
    alpha: FieldElement
    beta: FieldElement
    gamma: FieldElement
    delta: FieldElement
    transform: Matrix | None = None     # (X_old, Y_old) = transform * (X_new, Y_new)
    original: GeneralPresentation | None = None

    def __post_init__(self):
        if self.field.characteristic != 3:
            raise PreconditionError("the char-3 branch needs a field of characteristic 3")
        if self.branch not in (E_ZERO, E_NONZERO):
            raise ValueError(f"unknown branch {self.branch!r}")
        if self.alpha.is_zero():
            raise PreconditionError("alpha must be nonzero", clause="alpha != 0")

    @classmethod
    def e_zero(cls, field: Field, alpha, beta, gamma, delta) -> Char3Presentation:
        return cls(field, E_ZERO, *(field(v) for v in (alpha, beta, gamma, delta)))

    @classmethod
    def normalized(cls, field: Field, alpha, beta, gamma, delta) -> Char3Presentation:
        """Already of the shape ``Z^3 - (X^2 - Y^2)Z - f``."""
        return cls(field, E_NONZERO, *(field(v) for v in (alpha, beta, gamma, delta)),
                   transform=Matrix.identity(field, 2))

    def coeffs(self) -> tuple:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def coeff_dict(self) -> dict[str, str]:
        return {n: str(v) for n, v in zip(("alpha", "beta", "gamma", "delta"), self.coeffs())}

    @property
    def kappa(self) -> FieldElement:
        """``delta + beta^3 + beta``, the right-hand side of ``y1^3 + y2^3``."""
        return self.delta + self.beta ** 3 + self.beta

    def f_polys(self, names=("X", "Y")) -> list[CommPoly]:
        K = self.field
        X, Y = (CommPoly.variable(K, names, n) for n in names)
        f2 = CommPoly(K, names) if self.branch == E_ZERO else X * X - Y * Y
        f3 = (X ** 3 * self.alpha + X * X * Y * self.beta + X * Y * Y * self.gamma
              + Y ** 3 * self.delta)
        return [CommPoly(K, names), f2, f3]

    def general(self) -> GeneralPresentation:
        return GeneralPresentation(3, 2, self.f_polys(), self.field)

    def swap_xy(self) -> Char3Presentation:
        """Exchange the roles of X and Y (e = 0 only)."""
        if self.branch != E_ZERO:
            raise PreconditionError("swapping X and Y is only used in the e = 0 branch")
        return Char3Presentation.e_zero(self.field, self.delta, self.gamma, self.beta, self.alpha)


def char3_from_coeffs(field: Field, e, alpha, beta, gamma, delta) -> Char3Presentation:
    """Presentation of ``Z^3 - eXYZ - f``; normalizes when ``e != 0``."""
    e = field(e)
    if e.is_zero():
        return Char3Presentation.e_zero(field, alpha, beta, gamma, delta)
    names = ("X", "Y")
    X, Y = (CommPoly.variable(field, names, n) for n in names)
    f3 = X ** 3 * field(alpha) + X * X * Y * field(beta) + X * Y * Y * field(gamma) + Y ** 3 * field(delta)
    gp = GeneralPresentation(3, 2, [CommPoly(field, names), X * Y * e, f3], field)
    return normalize_char3(gp)


def normalize_char3(gp: GeneralPresentation) -> Char3Presentation:
    """Bring ``Z^3 - f2 Z - f3`` with ``f2 = eXY`` (e != 0) to ``f2 = X^2 - Y^2``.

    The substitution ``X = -(X' + Y')/e``, ``Y = Y' - X'`` sends ``eXY`` to
    ``X'^2 - Y'^2``; the new cubic is read off by exact composition and the
    inverse substitution is checked to recover the input.
    """
    K = gp.field
    if K.characteristic != 3:
        raise PreconditionError("normalization is specific to characteristic 3")
    if gp.d != 3 or gp.n != 2:
        raise PreconditionError("expected a cubic form in two variables")
    f1, f2, f3 = gp.f
    if not f1.is_zero():
        raise PreconditionError("the char-3 family has no Z^2 term")
    names = f2.names
    X, Y = (CommPoly.variable(K, names, n) for n in names)
    if f2 == X * X - Y * Y:
        M = Matrix.identity(K, 2)
    else:
        e = f2.coefficient((1, 1))
        if e.is_zero() or f2 != X * Y * e:
            raise PreconditionError(f"f2 = {f2} is neither e*X*Y with e != 0 nor X^2 - Y^2")
        ie = e.inverse()
        M = Matrix(K, [[-ie, -ie], [-1, 1]])
    new_xy = [X * M[0, 0] + Y * M[0, 1], X * M[1, 0] + Y * M[1, 1]]
    g2 = f2.substitute(new_xy)
    if g2 != X * X - Y * Y:
        raise PreconditionError("normalizing substitution failed to produce X^2 - Y^2")
    g3 = f3.substitute(new_xy)
    coeff = [g3.coefficient(exps) for exps in ((3, 0), (2, 1), (1, 2), (0, 3))]
    pres = Char3Presentation(K, E_NONZERO, *coeff, transform=M, original=gp)
    Mi = M.inverse()
    back_xy = [X * Mi[0, 0] + Y * Mi[0, 1], X * Mi[1, 0] + Y * Mi[1, 1]]
    back = [p.substitute(back_xy) for p in pres.f_polys(names)]
    if back[1] != f2 or back[2] != f3:
        raise PreconditionError("normalization round trip failed")
    return pres


def delta_char3(pres: Char3Presentation) -> FieldElement:
    if pres.branch != E_ZERO:
        raise PreconditionError("Delta belongs to the e = 0 branch")
    a, b, c, d = pres.coeffs()
    return -c ** 3 * a + c * c * b * b - b ** 3 * d + b ** 6


def curve_char3(pres: Char3Presentation) -> CurveModel:
    K = pres.field
    names = ("r", "s")
    r, s = (CommPoly.variable(K, names, n) for n in names)
    if pres.branch == E_ZERO:
        return CurveModel(s * s - r ** 3 - delta_char3(pres), "E_Delta")
    a, b, c, d = pres.coeffs()
    rhs = r ** 3 + r * r - r * (c * c + c) - a * a - a * c ** 3 + a * c + pres.kappa ** 2
    return CurveModel(s * s - rhs, "E")


def ring_char3(field: Field) -> NCRing:
    return NCRing(field, ["x", "y1", "y2"], weights=[1, 2, 3], precedence=["x", "y2", "y1"])


def y_expression(pres: Char3Presentation, ring: NCRing) -> NCPoly:
    y1, y2 = ring.gen("y1"), ring.gen("y2")
    if pres.branch == E_ZERO:
        return y2 - y1
    return ring.scalar(-pres.beta) + y1 + y2


def w_expression(pres: Char3Presentation, ring: NCRing) -> NCPoly:
    x, y1, y2 = (ring.gen(n) for n in ("x", "y1", "y2"))
    if pres.branch == E_ZERO:
        return y2 * pres.beta + x * pres.gamma + y1 * y1
    return y2 * y1 - x * x + x * (1 - pres.gamma)


def rewrite_system_char3(pres: Char3Presentation) -> RewriteSystem:
    ring = ring_char3(pres.field)
    x, y1, y2 = (ring.gen(n) for n in ("x", "y1", "y2"))
    a, b, c, d = pres.coeffs()
    W = ring.word
    if pres.branch == E_ZERO:
        rules = [
            (W("x", "x", "x"), ring.scalar(a)),
            (W("y1", "x"), x * y1 - b),
            (W("y2", "x"), x * y2 - y1),
            (W("y1", "y2"), y2 * y1 + c),
            (W("y2", "y2", "y2"), y1 ** 3 + d),
        ]
    else:
        rules = [
            (W("x", "x", "x"), x + a),
            (W("y1", "x"), x * y1 + y1),
            (W("y2", "x"), x * y2 + y2 * 2),
            (W("y1", "y2"), y2 * y1 - x + c),
            (W("y2", "y2", "y2"), ring.scalar(pres.kappa) - y1 ** 3),
        ]
    return RewriteSystem(ring, rules, name=pres.branch)


def original_relations(pres: Char3Presentation, ring: NCRing) -> list[tuple[str, NCPoly]]:
    x = ring.gen("x")
    y = y_expression(pres, ring)
    labels = {(3, 0): "x^3 relation", (2, 1): "x^2*y relation",
              (1, 2): "x*y^2 relation", (0, 3): "y^3 relation"}
    return [(labels[mu], rel) for mu, rel in pres.general().defining_relations([x, y], ring.one())]


def verify_central_char3(pres: Char3Presentation, rs: RewriteSystem | None = None) -> CheckReport:
    """Original relations, centrality and the branch-specific identities."""
    rs = rs or rewrite_system_char3(pres)
    ring = rs.ring
    nf = rs.normal_form
    x, y1, y2 = (ring.gen(n) for n in ("x", "y1", "y2"))
    a, b, c, d = pres.coeffs()
    report = CheckReport(f"char-3 identities ({pres.branch})")
    for name, rel in original_relations(pres, ring):
        report.zero(name, nf(rel))
    w = w_expression(pres, ring)
    for cname, el in (("w", w), ("y1^3", y1 ** 3), ("y2^3", y2 ** 3)):
        for g in ("x", "y1", "y2"):
            gen = ring.gen(g)
            report.zero(f"[{cname}, {g}]", nf(el * gen - gen * el))
    if pres.branch == E_ZERO:
        if not b.is_zero():
            Delta = delta_char3(pres)
            report.zero("w^3 + Delta = (y1^3 - beta^3)^2",
                        nf(w ** 3 + Delta - (y1 ** 3 - b ** 3) ** 2))
            z = x * y1 * b.inverse()
            report.zero("xz - zx = x", nf(x * z - z * x - x))
            report.zero("z^3 - z = alpha beta^-3 y1^3", nf(z ** 3 - z - y1 ** 3 * (a / b ** 3)))
        elif c.is_zero():
            # y1 is central; z = x y2 y1^-1, so the identities are checked times y1^3
            report.zero("y1 central: [y1, x]", nf(y1 * x - x * y1))
            report.zero("y1 central: [y1, y2]", nf(y1 * y2 - y2 * y1))
            zy = x * y2
            report.zero("(xz - zx) y1 = x y1", nf(x * zy - zy * x - x * y1))
            report.zero("(z^3 - z) y1^3 = alpha y2^3", nf(zy ** 3 - zy * y1 * y1 - y2 ** 3 * a))
    else:
        k = pres.kappa
        rhs = y1 ** 3 * k - y1 ** 6 + w * w + w * (c * c + c) - a * a - a * c ** 3 + a * c
        report.zero("w^3 identity", nf(w ** 3 - rhs))
    return report


def verify_decomposition(pres: Char3Presentation, rs: RewriteSystem | None = None) -> CheckReport:
    """Re-derive the y_k from y with the eigen-decomposition lemmas inside the quotient."""
    rs = rs or rewrite_system_char3(pres)
    ring = rs.ring
    ctx = QuotientContext(rs)
    x, y1, y2 = (ring.gen(n) for n in ("x", "y1", "y2"))
    y = rs.normal_form(y_expression(pres, ring))
    report = CheckReport("eigen-decomposition of y")
    if pres.branch == E_ZERO:
        z = decompose_pcentral(y, x, 3, ctx)
        expected = [ring.scalar(pres.beta), y1, y2]
        for k in range(3):
            report.zero(f"z_{k}", rs.normal_form(z[k] - expected[k]))
        report.zero("y = z_2 - z_1", rs.normal_form(y - z[2] + z[1]))
    else:
        parts = decompose_artin_schreier(y, x, 3, ctx)
        expected = [ring.scalar(-pres.beta), y1, y2]
        for k in range(3):
            report.zero(f"t_{k}", rs.normal_form(parts.t[k] - expected[k]))
            tk = parts.t[k]
            report.zero(f"t_{k} x - x t_{k} = {k} t_{k}", rs.normal_form(tk * x - x * tk - tk * k))
    return report


# ---------------------------------------------------------------------------
# simple images
# ---------------------------------------------------------------------------

@dataclass
class Char3Image:
    spec: SymbolAlgebraSpec
    theorem: str
    azumaya: bool | None
    localized: bool
    note: str = ""

    def render(self) -> str:
        return self.spec.render()

    def to_json(self) -> dict:
        out = self.spec.to_json()
        out.update({"case": self.theorem, "azumaya": self.azumaya, "localized": self.localized,
                    "note": self.note})
        return out


def _on_curve(pres: Char3Presentation, pt) -> CurvePoint:
    curve = curve_char3(pres)
    if isinstance(pt, CurvePoint):
        if pt.curve is None or not curve.contains(pt.coords):
            raise PreconditionError(f"{pt} is not on {curve.label}")
        return pt
    return curve.point(tuple(pt))


def simple_image_char3(pres: Char3Presentation, pt) -> Char3Image:
    """Artin-Schreier symbol algebra attached to a point (or a scalar s0)."""
    a, b, c, d = pres.coeffs()
    if pres.branch == E_ZERO:
        if not b.is_zero():
            point = _on_curve(pres, pt)
            L = point.field
            _, s0 = point.coords
            spec = SymbolAlgebraSpec.artin_schreier(L(a) / L(b) ** 3 * (s0 + L(b) ** 3), L(a), L)
            return Char3Image(spec, "beta != 0", True, False)
        if not c.is_zero():
            if d.is_zero():
                raise PreconditionError("beta = 0, gamma != 0 and delta = 0 is not covered",
                                        clause="beta = 0, gamma != 0, delta != 0")
            raise PreconditionError("beta = 0 with gamma, delta != 0: exchange X and Y (swap_xy) first",
                                    clause="beta != 0")
        s0 = _scalar_point(pt, pres.field)
        if s0.is_zero():
            raise PreconditionError("s0 must be nonzero", clause="s0 in F-bar^x")
        L = s0.field
        spec = SymbolAlgebraSpec.artin_schreier(L(a) * (s0 ** 3 + d) / s0 ** 3, L(a), L)
        return Char3Image(spec, "beta = gamma = 0", False, True,
                          "images of the localization at y1; the algebra itself is not Azumaya")
    point = _on_curve(pres, pt)
    L = point.field
    _, s0 = point.coords
    k = L(pres.kappa)
    if not k.is_zero():
        if s0 != k:
            spec = SymbolAlgebraSpec.artin_schreier(L(a), s0 - k, L)
        else:
            spec = SymbolAlgebraSpec.artin_schreier(-L(a), k, L)
        return Char3Image(spec, "delta + beta^3 + beta != 0", True, False)
    if s0.is_zero():
        raise PreconditionError("with delta + beta^3 + beta = 0 only points with s0 != 0 are covered",
                                clause="s0 != 0")
    spec = SymbolAlgebraSpec.artin_schreier(L(a), s0, L)
    degenerate = (c ** 3 - c - a).is_zero()
    note = ("gamma^3 - gamma - alpha = 0: F itself is an image, so the algebra is not Azumaya"
            if degenerate else "images of the localization at y1^3")
    return Char3Image(spec, "delta + beta^3 + beta = 0", False if degenerate else None, True, note)


def _scalar_point(pt, field: Field) -> FieldElement:
    if isinstance(pt, CurvePoint):
        if len(pt.coords) != 1:
            raise PreconditionError("this case takes a single nonzero scalar s0")
        return pt.coords[0]
    if isinstance(pt, (tuple, list)):
        if len(pt) != 1:
            raise PreconditionError("this case takes a single nonzero scalar s0")
        pt = pt[0]
    return pt if isinstance(pt, FieldElement) else field(pt)
