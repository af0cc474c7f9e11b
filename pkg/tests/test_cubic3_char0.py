from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from gencliff.commpoly import CommPoly
from gencliff.cubic3_char0 import (CubicPresentation, build_representation, curve_char0,
                                   invariants, invariants_expanded, rewrite_system_char0, ring_char0,
                                   simple_image, verify_identities, verify_centrality, w_expression,
                                   y0_expression, y_expression)
from gencliff.errors import PreconditionError
from gencliff.fieldtower import QQ, FieldElement, adjoin_rho, extend
from gencliff.matrices import Matrix
from gencliff.ncalg import star_product

QRHO = adjoin_rho(QQ)
RHO = QRHO.rho


def pres(*coeffs):
    return CubicPresentation.from_coeffs(QRHO, *coeffs)


DIAG = pres(0, 0, 0, 2, 0, 0, 1)
EXY = pres(0, 0, 1, 1, 0, 0, 1)


def test_invariant_examples():
    inv = invariants(EXY)
    assert (inv.D1, inv.D2, inv.D) == (0, 0, QRHO(Fraction(-26, 27)))
    inv = invariants(DIAG)
    assert (inv.D1, inv.D2, inv.D) == (0, 0, -1)
    inv = invariants(pres(3, 0, 1, 1, 0, 0, 0))
    assert (inv.D1, inv.D2, inv.D) == (1, -9, QRHO(Fraction(-53, 27)))


r_, t_, e_, a_, b_, g_, d_ = sympy.symbols("r t e alpha beta gamma delta")
SYM_D1 = g_ + e_ * r_ / 3 - b_ ** 2 / (3 * a_)
SYM_D2 = e_ * b_ - 3 * a_ * t_ - a_ * r_ ** 2
SYM_D = (e_ ** 3 / (27 * a_) + b_ ** 3 / (27 * a_ ** 2) - 2 * r_ ** 3 / 27 + b_ / (3 * a_) * SYM_D1
         - r_ * t_ / 3 - d_)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@settings(max_examples=60, deadline=None)
@given(st.tuples(rationals, rationals, rationals, rationals.filter(lambda q: q != 0),
                 rationals, rationals, rationals))
def test_invariants_match_sympy(values):
    subs = dict(zip((r_, t_, e_, a_, b_, g_, d_), (sympy.Rational(v.numerator, v.denominator)
                                                   for v in values)))
    inv = invariants(pres(*values))
    for ours, theirs in ((inv.D1, SYM_D1), (inv.D2, SYM_D2), (inv.D, SYM_D)):
        q = sympy.Rational(theirs.subs(subs))
        assert ours == QRHO(Fraction(int(q.p), int(q.q)))
    assert inv.D == invariants_expanded(pres(*values))


def test_y0_examples():
    ring = ring_char0(QRHO)
    x = ring.gen("x")
    assert y0_expression(pres(0, 5, 0, 2, 0, 1, 1), ring).is_zero()
    assert y0_expression(pres(0, 0, 1, 1, 0, 0, 0), ring) == x * x * QRHO(Fraction(1, 3))
    assert y0_expression(pres(3, 0, 0, 1, 3, 0, 0), ring) == x + 1


def test_w_examples():
    ring = ring_char0(QRHO)
    x, y1, y2 = (ring.gen(n) for n in ("x", "y1", "y2"))
    assert w_expression(DIAG, ring) == x * x * y2 * y1 * QRHO(Fraction(1, 2))
    p = pres(0, 0, 0, 1, 0, 3, 0)     # D1 = 3, D2 = 0
    assert w_expression(p, ring) == x * x * y2 * y1 + x * RHO ** 2
    assert len(w_expression(pres(3, 1, 1, 1, 1, 1, 1), ring).terms) == 3


@pytest.mark.parametrize("coeffs", [(0, 0, 0, 2, 0, 0, 1), (3, 1, 1, 1, 1, 1, 1), (0, 0, 1, 1, 0, 0, 1)])
def test_centrality_and_identities(coeffs):
    p = pres(*coeffs)
    rs = rewrite_system_char0(p)
    assert verify_centrality(p, rs).ok
    assert verify_identities(p, rs).ok
    ring = rs.ring
    x = ring.gen("x")
    w = w_expression(p, ring)
    assert rs.normal_form(w * x - x * w).is_zero()
    lhs = star_product([(x, 2), (y_expression(p, ring), 1)])
    assert rs.normal_form(lhs - x * x * p.r - x * p.e - p.beta).is_zero()


def test_dropping_the_y1y2_rule_breaks_centrality():
    rs = rewrite_system_char0(DIAG).without(("y1", "y2"))
    report = verify_centrality(DIAG, rs)
    assert not report.get("[w, y1]").ok


def test_curves():
    names = ("R", "S")
    R, S = (CommPoly.variable(QRHO, names, n) for n in names)
    assert curve_char0(DIAG).poly == S * S - S + R ** 3 * 2
    expected = S * S + S * (QRHO(Fraction(-26, 27)) - R * RHO ** 2) + R ** 3
    assert curve_char0(EXY).poly == expected


def test_curve_smoothness_is_reported():
    report = curve_char0(DIAG).smoothness()
    assert report.smooth is True


def test_simple_images():
    assert simple_image(DIAG, (0, 1)).render() == "(2, 1)_{3, QQ(rho)}"
    assert simple_image(DIAG, (0, 0)).render() == "(1, 2)_{3, QQ(rho)}"
    with pytest.raises(PreconditionError):
        simple_image(DIAG, (1, 1))


def test_refusals():
    with pytest.raises(PreconditionError):
        simple_image(pres(0, 0, 0, 1, 0, 0, 0), (0, 0))          # D = 0
    with pytest.raises(PreconditionError):
        simple_image(pres(0, 0, 0, 8, 0, 0, 1), (0, 1))          # alpha = 2^3


def test_undecided_cube_needs_assertion():
    K = extend(QRHO, [-2, 0, 0, 1], "c")
    p = CubicPresentation.from_coeffs(K, alpha=3, delta=1)   # norm 3^6 is a cube
    with pytest.raises(PreconditionError):
        simple_image(p, (0, 1))
    assert simple_image(p, (0, 1), assert_alpha_not_cube=True).b == K(1)


@pytest.mark.parametrize("point", [(0, 1), (0, 0)])
def test_representation_relations(point):
    rep = build_representation(DIAG, point)
    X, Y = rep.matrices
    L = rep.field
    I = Matrix.identity(L, 3)
    assert X ** 3 == I * 2
    assert Y ** 3 == I          # f(0, 1) = delta = 1
    rng = random.Random(11)
    gp = DIAG.general()
    for _ in range(5):
        a = [L(Fraction(rng.randint(-9, 9), rng.randint(1, 9))) for _ in range(2)]
        M = X * a[0] + Y * a[1]
        f3 = gp.f[2].lift(L).evaluate(a)
        assert M ** 3 == I * f3


def test_representation_at_general_presentation():
    p = pres(3, 1, 1, 1, 1, 1, 1)
    curve = curve_char0(p)
    # find a point with R0 = 0: S^2 + b S + c = 0 over QQ(rho) may need a square root
    c0, c1, _ = curve.s_coefficients()
    K = QRHO
    b = FieldElement(K, c1[0]) if c1 else K(0)
    c = FieldElement(K, c0[0]) if c0 else K(0)
    L = extend(K, [c - b * b / 4, 0, 1], "s")
    S0 = L.gen - L(b) / 2
    rep = build_representation(p, (L(0), S0))
    assert rep.dim == 3
