"""Cubic Clifford algebras in characteristic not 3.

``Phi(Z, X, Y) = Z^3 - rYZ^2 - (eXY + tY^2)Z - (aX^3 + bX^2Y + cXY^2 + dY^3)``
with ``a = alpha != 0`` over a field containing a primitive cube root of
unity.  Writing ``y = y0 + y1 + y2`` with ``y_k x = rho^k x y_k`` turns the
algebra into one generated by ``x, y1, y2``; this module builds that
presentation as a rewrite system, the invariants ``D1, D2, D``, the curve
whose coordinate ring is the center, the simple images at curve points and
explicit 3x3 representations.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .checks import CheckReport
from .commpoly import CommPoly
from .curves import CurveModel, CurvePoint
from .errors import PreconditionError, VerificationError
from .fieldtower import UNDECIDED, Field, FieldElement, extend, has_cube_root
from .matrices import Matrix
from .ncalg import NCPoly, NCRing, RewriteSystem, overlap_check
from .repcheck import GeneralPresentation, MatrixRep, is_representation
from .symbolalg import SymbolAlgebraSpec, f_coordinate_rank, phi_map

COEFF_NAMES = ("r", "t", "e", "alpha", "beta", "gamma", "delta")


@dataclass
class Char0Invariants:
    D1: FieldElement
    D2: FieldElement
    D: FieldElement

    @property
    def d_nonzero(self) -> bool:
        return not self.D.is_zero()

    def to_json(self) -> dict[str, str]:
        return {"D1": str(self.D1), "D2": str(self.D2), "D": str(self.D)}


@dataclass
class CubicPresentation:
    field: Field
    r: FieldElement
    t: FieldElement
    e: FieldElement
    alpha: FieldElement
    beta: FieldElement
    gamma: FieldElement
    delta: FieldElement

    @classmethod
    def from_coeffs(cls, field: Field, r=0, t=0, e=0, alpha=1, beta=0, gamma=0, delta=0) -> CubicPresentation:
        return cls(field, *(field(v) for v in (r, t, e, alpha, beta, gamma, delta)))

    @classmethod
    def from_tuple(cls, field: Field, values) -> CubicPresentation:
        return cls.from_coeffs(field, *values)

    def coeffs(self) -> tuple:
        return (self.r, self.t, self.e, self.alpha, self.beta, self.gamma, self.delta)

    def coeff_dict(self) -> dict[str, str]:
        return {n: str(v) for n, v in zip(COEFF_NAMES, self.coeffs())}

    @property
    def rho(self) -> FieldElement:
        return self.field.rho

    def validate(self) -> CubicPresentation:
        if self.field.characteristic == 3:
            raise PreconditionError("characteristic 3 is handled by the char-3 branch")
        if self.alpha.is_zero():
            raise PreconditionError("alpha must be nonzero", clause="alpha != 0")
        if self.field.rho is None:
            raise PreconditionError(f"{self.field.name} has no primitive cube root of unity",
                                    clause="F contains rho")
        return self

    def f_polys(self, names=("X", "Y")) -> list[CommPoly]:
        K = self.field
        X, Y = (CommPoly.variable(K, names, n) for n in names)
        return [Y * self.r, X * Y * self.e + Y * Y * self.t,
                X ** 3 * self.alpha + X * X * Y * self.beta + X * Y * Y * self.gamma + Y ** 3 * self.delta]

    def general(self) -> GeneralPresentation:
        return GeneralPresentation(3, 2, self.f_polys(), self.field)

    def phi_poly(self) -> CommPoly:
        return self.general().phi_poly()

    def invariants(self) -> Char0Invariants:
        return invariants(self)

    def curve_s_coefficients(self) -> list[tuple]:
        c0, c1, _ = curve_char0(self).s_coefficients()
        return [c0, c1]


def invariants(pres: CubicPresentation) -> Char0Invariants:
    pres.validate()
    r, t, e, a, b, c, d = pres.coeffs()
    D1 = c + e * r / 3 - b * b / (3 * a)
    D2 = e * b - 3 * a * t - a * r * r
    D = e ** 3 / (27 * a) + b ** 3 / (27 * a * a) - 2 * r ** 3 / 27 + b / (3 * a) * D1 - r * t / 3 - d
    return Char0Invariants(D1, D2, D)


def invariants_expanded(pres: CubicPresentation) -> FieldElement:
    """``D`` with ``D1`` substituted and collected over the common denominator ``27 alpha^2``."""
    r, t, e, a, b, c, d = pres.coeffs()
    num = (a * e ** 3 - 2 * b ** 3 + 9 * a * b * c + 3 * a * b * e * r
           - a * a * (2 * r ** 3 + 9 * r * t + 27 * d))
    return num / (27 * a * a)


def ring_char0(field: Field) -> NCRing:
    """Generators x, y1, y2 with weights 1, 2, 3 and precedence x < y2 < y1."""
    return NCRing(field, ["x", "y1", "y2"], weights=[1, 2, 3], precedence=["x", "y2", "y1"])


def y0_expression(pres: CubicPresentation, ring: NCRing | None = None) -> NCPoly:
    pres.validate()
    ring = ring or ring_char0(pres.field)
    x = ring.gen("x")
    a = pres.alpha
    return (x * x * pres.e + x * pres.beta + ring.scalar(a * pres.r)) * (3 * a).inverse()


def w_expression(pres: CubicPresentation, ring: NCRing | None = None) -> NCPoly:
    """``x^-1 y2 y1 + rho^2 D1/(3 alpha) x + D2/(9 alpha) x^-1`` with ``x^-1 = x^2/alpha``."""
    inv = invariants(pres)
    ring = ring or ring_char0(pres.field)
    x, y1, y2 = (ring.gen(n) for n in ("x", "y1", "y2"))
    a, rho = pres.alpha, pres.rho
    x_inv = x * x * a.inverse()
    return x_inv * y2 * y1 + x * (rho ** 2 * inv.D1 / (3 * a)) + x_inv * (inv.D2 / (9 * a))


def y_expression(pres: CubicPresentation, ring: NCRing | None = None) -> NCPoly:
    ring = ring or ring_char0(pres.field)
    return y0_expression(pres, ring) + ring.gen("y1") + ring.gen("y2")


def rewrite_system_char0(pres: CubicPresentation) -> RewriteSystem:
    inv = invariants(pres)
    K = pres.field
    ring = ring_char0(K)
    x, y1, y2 = (ring.gen(n) for n in ("x", "y1", "y2"))
    a, rho = pres.alpha, pres.rho
    w = w_expression(pres, ring)
    rules = [
        (ring.word("x", "x", "x"), ring.scalar(a)),
        (ring.word("y1", "x"), x * y1 * rho),
        (ring.word("y2", "x"), x * y2 * rho ** 2),
        (ring.word("y1", "y2"),
         y2 * y1 * rho + x * x * ((1 - rho) * inv.D1 / (3 * a)) - ring.scalar((1 - rho) * inv.D2 / (9 * a))),
        (ring.word("y2", "y2", "y2"), w * (rho ** 2 * pres.e) - inv.D - y1 ** 3),
    ]
    return RewriteSystem(ring, rules, name="char0")


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def central_elements(pres: CubicPresentation, ring: NCRing) -> dict[str, NCPoly]:
    y1, y2 = ring.gen("y1"), ring.gen("y2")
    return {"w": w_expression(pres, ring), "y1^3": y1 ** 3, "y2^3": y2 ** 3}


def verify_centrality(pres: CubicPresentation, rs: RewriteSystem | None = None) -> CheckReport:
    """All nine commutators of ``w, y1^3, y2^3`` with ``x, y1, y2`` vanish."""
    rs = rs or rewrite_system_char0(pres)
    ring = rs.ring
    report = CheckReport("centrality of w, y1^3, y2^3")
    for cname, c in central_elements(pres, ring).items():
        for g in ("x", "y1", "y2"):
            gen = ring.gen(g)
            report.zero(f"[{cname}, {g}]", rs.normal_form(c * gen - gen * c))
    return report


verify_lemma31 = verify_centrality


def original_relations(pres: CubicPresentation, ring: NCRing) -> list[tuple[str, NCPoly]]:
    """The four defining relations of the algebra with ``y = y0 + y1 + y2``."""
    gp = pres.general()
    x = ring.gen("x")
    y = y_expression(pres, ring)
    labels = {(3, 0): "x^3 = alpha", (2, 1): "x^2*y relation",
              (1, 2): "x*y^2 relation", (0, 3): "y^3 relation"}
    return [(labels[mu], rel) for mu, rel in gp.defining_relations([x, y], ring.one())]


def verify_identities(pres: CubicPresentation, rs: RewriteSystem | None = None) -> CheckReport:
    """The y1^3 + y2^3 identity and the four original relations reduce to 0."""
    rs = rs or rewrite_system_char0(pres)
    ring = rs.ring
    inv = invariants(pres)
    y1, y2 = ring.gen("y1"), ring.gen("y2")
    report = CheckReport("presentation identities")
    w = w_expression(pres, ring)
    report.zero("D + y1^3 + y2^3 - rho^2 e w", rs.normal_form(ring.scalar(inv.D) + y1 ** 3 + y2 ** 3
                                                              - w * (pres.rho ** 2 * pres.e)))
    for name, rel in original_relations(pres, ring):
        report.zero(name, rs.normal_form(rel))
    report.add("D closed form matches expanded form", inv.D == invariants_expanded(pres),
               f"{inv.D} vs {invariants_expanded(pres)}")
    return report


def verify_confluence(pres: CubicPresentation, max_len: int = 8) -> CheckReport:
    rs = rewrite_system_char0(pres)
    bad = overlap_check(rs, max_len)
    report = CheckReport("confluence audit")
    report.add(f"overlaps up to length {max_len}", not bad,
               "; ".join(a.describe(rs.ring) for a in bad[:3]))
    return report


def verify_phi(pres: CubicPresentation) -> CheckReport:
    """Cross-check the rewrite system against the function-field symbol algebra."""
    phi = phi_map(pres)
    rs = rewrite_system_char0(pres)
    ring = rs.ring
    report = CheckReport("function-field oracle")
    x, y1 = ring.gen("x"), ring.gen("y1")
    w = w_expression(pres, ring)
    for lhs, rhs in rs.rules:
        lhs_p = ring.monomial(lhs)
        report.zero(f"rule {ring.word_str(lhs)} preserved", phi.apply(lhs_p - rhs))
    for name, rel in original_relations(pres, ring):
        report.zero(f"{name} under phi", phi.apply(rel))
    phi_w = phi.apply(w)
    report.zero("phi(w) = R", phi_w - phi.spec.scalar(phi.R))
    phi_s = phi.apply(y1 ** 3)
    report.zero("phi(y1)^3 = S", phi_s - phi.spec.scalar(phi.S))
    curve = curve_char0(pres)
    report.zero("curve at (phi(w), phi(y1^3))", curve.poly.evaluate([phi_w, phi_s]))
    images = []
    for i in range(3):
        for j in range(3):
            for k in range(3):
                images.append(phi.apply(x ** i * y1 ** j * w ** k))
    rank = f_coordinate_rank(images)
    report.add("27 images independent over F", rank == 27, f"rank {rank}")
    return report


# ---------------------------------------------------------------------------
# curve, images, representations
# ---------------------------------------------------------------------------

def curve_char0(pres: CubicPresentation) -> CurveModel:
    """``(D - rho^2 e R) S + S^2 + alpha R^3 - D1^3/(27 alpha) - D2^3/(729 alpha^3) - rho^2 D1 D2/(9 alpha) R``."""
    inv = invariants(pres)
    K = pres.field
    names = ("R", "S")
    R, S = (CommPoly.variable(K, names, n) for n in names)
    a, rho, e = pres.alpha, pres.rho, pres.e
    poly = (S * (R * (-rho ** 2 * e) + inv.D) + S * S + R ** 3 * a
            - inv.D1 ** 3 / (27 * a) - inv.D2 ** 3 / (729 * a ** 3)
            - R * (rho ** 2 * inv.D1 * inv.D2 / (9 * a)))
    return CurveModel(poly, "E")


def check_theorem_hypotheses(pres: CubicPresentation, assert_alpha_not_cube: bool = False) -> None:
    inv = invariants(pres)
    if inv.D.is_zero():
        raise PreconditionError("D = 0: the classification needs D != 0", clause="D != 0")
    root = has_cube_root(pres.alpha)
    if root is UNDECIDED:
        if not assert_alpha_not_cube:
            raise PreconditionError(
                f"cannot decide whether alpha = {pres.alpha} is a cube in {pres.field.name}; "
                "pass --assert-alpha-not-cube to assert it", clause="F[x: x^3 = alpha] is a field")
    elif root is not None:
        raise PreconditionError(f"alpha = {pres.alpha} is the cube of {root}, so F[x] is not a field",
                                clause="F[x: x^3 = alpha] is a field")


def y2_cube_value(pres: CubicPresentation, pt: CurvePoint) -> FieldElement:
    """Value of the central element y2^3 at a point: ``rho^2 e R0 - S0 - D``."""
    R0, S0 = pt.coords
    return pres.rho ** 2 * pres.e * R0 - S0 - invariants(pres).D


def simple_image(pres: CubicPresentation, pt: CurvePoint | tuple,
                 assert_alpha_not_cube: bool = False) -> SymbolAlgebraSpec:
    """The degree-3 symbol algebra attached to a point of the curve."""
    pres.validate()
    check_theorem_hypotheses(pres, assert_alpha_not_cube)
    curve = curve_char0(pres)
    if not isinstance(pt, CurvePoint):
        pt = curve.point(pt)
    elif pt.curve is None or not curve.contains(pt.coords):
        raise PreconditionError(f"{pt} is not on the curve")
    R0, S0 = pt.coords
    L = pt.field
    t2 = y2_cube_value(pres, pt)
    if S0.is_zero() and t2.is_zero():
        raise VerificationError("y1^3 and y2^3 both vanish at a point although D != 0")
    if not S0.is_zero():
        return SymbolAlgebraSpec.cyclic(L(pres.alpha), S0, L)
    return SymbolAlgebraSpec.cyclic(L(pres.rho) ** 2 * pres.e * R0 - invariants(pres).D, L(pres.alpha), L)


def cube_root_field(alpha: FieldElement, base: Field, name: str = "c") -> tuple[Field, FieldElement]:
    """A field containing ``base`` with a cube root of ``alpha``, and that root."""
    a = base(alpha)
    root = has_cube_root(a)
    if root is not None and root is not UNDECIDED:
        return base, root
    L = extend(base, [-a, 0, 0, 1], name)
    return L, L.gen


def _rep_field(pres: CubicPresentation, pt: CurvePoint, c: FieldElement | None) -> tuple[Field, FieldElement]:
    if c is None:
        return cube_root_field(pres.alpha, pt.field)
    L = c.field if c.field.contains_field(pt.field) else pt.field
    c = L(c)
    if c ** 3 != pres.alpha:
        raise PreconditionError(f"{c} is not a cube root of alpha")
    return L, c


def build_representation(pres: CubicPresentation, pt: CurvePoint | tuple,
                         c: FieldElement | None = None) -> MatrixRep:
    """Explicit 3x3 matrices for ``x, y`` at a curve point.

    With ``S0 != 0``: ``U = diag(c, rho^2 c, rho c)`` and ``V`` the cyclic
    shift ``e1 -> e2 -> e3 -> S0 e1`` give ``VU = rho UV``; then
    ``x -> U``, ``y1 -> V`` and ``y2`` follows from ``w = R0``.  With
    ``S0 = 0`` the roles swap: ``y2 -> P`` (shift ``e1 -> e3 -> e2 -> T0 e1``
    where ``T0`` is the value of ``y2^3``) and ``y1`` follows from ``w``.
    Every relation is verified before returning.
    """
    pres.validate()
    inv = invariants(pres)
    curve = curve_char0(pres)
    if not isinstance(pt, CurvePoint):
        pt = curve.point(pt)
    L, c = _rep_field(pres, pt, c)
    R0, S0 = (L(v) for v in pt.coords)
    rho = L(pres.rho)
    a = L(pres.alpha)
    U = Matrix.diag(L, [c, rho ** 2 * c, rho * c])
    U_inv = U * U * a.inverse()
    g = U * R0 - U * U * (rho ** 2 * inv.D1 / (3 * a)) - U * U_inv * (inv.D2 / (9 * a))
    if not S0.is_zero():
        V = Matrix(L, [[0, 0, S0], [1, 0, 0], [0, 1, 0]])
        if V * U != U * V * rho:
            raise VerificationError("matrix orientation: V U != rho U V")
        Y1 = V
        Y2 = g * V.inverse()
    else:
        T0 = rho ** 2 * pres.e * R0 - inv.D
        if T0.is_zero():
            raise VerificationError("y1^3 and y2^3 both vanish at a point although D != 0")
        P = Matrix(L, [[0, T0, 0], [0, 0, 1], [1, 0, 0]])
        if P * U != U * P * rho ** 2:
            raise VerificationError("matrix orientation: P U != rho^2 U P")
        Y2 = P
        Y1 = P.inverse() * g
    x_poly = y0_expression(pres)
    Y0 = x_poly.evaluate({"x": U, "y1": Y1, "y2": Y2}, Matrix.identity(L, 3))
    rep = MatrixRep([U, Y0 + Y1 + Y2])
    verdict = is_representation(pres.general(), rep)
    if not verdict:
        mu, W = verdict.witness
        raise VerificationError(f"constructed matrices violate the relation for X^{mu}:\n{W}")
    return rep


def rational_samples(rng, count: int, bound: int = 20) -> list[tuple[Fraction, Fraction]]:
    out = []
    for _ in range(count):
        out.append(tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(2)))
    return out
