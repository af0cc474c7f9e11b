from __future__ import annotations

import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from gencliff.commpoly import CommPoly
from gencliff.cubic3_char3 import (E_NONZERO, E_ZERO, Char3Presentation, char3_from_coeffs,
                                   curve_char3, delta_char3, normalize_char3, rewrite_system_char3,
                                   simple_image_char3, verify_central_char3, verify_decomposition,
                                   w_expression)
from gencliff.curves import CurvePoint
from gencliff.errors import PreconditionError
from gencliff.fieldtower import GF, extend, find_irreducible
from gencliff.ncalg import RewriteSystem, overlap_check
from gencliff.repcheck import GeneralPresentation

F3 = GF(3)
F9 = extend(F3, [1, 0, 1], "i")
F27 = extend(F3, find_irreducible(F3, 3), "g")


def ez(*c, field=F3):
    return Char3Presentation.e_zero(field, *c)


def enz(*c, field=F3):
    return Char3Presentation.normalized(field, *c)


def test_delta_examples():
    assert delta_char3(ez(1, 1, 2, 1)) == F3(2)
    assert delta_char3(ez(2, 0, 0, 1)) == F3(0)
    assert delta_char3(ez(1, 1, 0, 1)) == F3(0)


def test_rewrite_examples():
    p = ez(1, 1, 2, 1)
    rs = rewrite_system_char3(p)
    x, y1, y2 = (rs.ring.gen(n) for n in ("x", "y1", "y2"))
    assert rs.normal_form(y1 * x) == x * y1 - 1
    assert rs.normal_form(y2 ** 3) == y1 ** 3 + 1
    q = enz(1, 1, 1, 2)
    rs = rewrite_system_char3(q)
    y1, y2 = rs.ring.gen("y1"), rs.ring.gen("y2")
    assert rs.normal_form(y1 ** 3 + y2 ** 3 - q.kappa).is_zero()


CASES = [ez(1, 1, 2, 1), ez(1, 0, 0, 1), ez(2, 1, 1, 2), enz(1, 0, 1, 1), enz(1, 1, 1, 2),
         ez(F9.gen, 1, F9.gen + 1, 2, field=F9), enz(F9.gen, F9.gen, 0, 1, field=F9)]


@pytest.mark.parametrize("p", CASES, ids=lambda p: f"{p.branch}-{p.field.name}-{[str(c) for c in p.coeffs()]}")
def test_identity_suite(p):
    rs = rewrite_system_char3(p)
    assert verify_central_char3(p, rs).ok
    assert verify_decomposition(p, rs).ok
    assert overlap_check(rs, 8) == []


def test_corrupted_y1y2_rule_is_detected():
    p = ez(1, 1, 2, 1)
    rs = rewrite_system_char3(p)
    ring = rs.ring
    W = ring.word
    rules = [(l, r + 1 if l == W("y1", "y2") else r) for l, r in rs.rules]
    bad = RewriteSystem(ring, rules)
    report = verify_central_char3(p, bad)
    assert not report.ok
    # [w, x] never uses the y1 y2 rule; the corruption surfaces in [w, y1]
    assert report.get("[w, x]").ok
    assert not report.get("[w, y1]").ok


def test_curves():
    names = ("r", "s")
    r, s = (CommPoly.variable(F3, names, n) for n in names)
    assert curve_char3(ez(1, 1, 2, 1)).poly == s * s - r ** 3 - 2
    assert curve_char3(enz(1, 0, 1, 1)).poly == s * s - r ** 3 - r * r - r
    p = enz(1, 1, 1, 1)        # kappa = 1 + 1 + 1 = 0
    assert p.kappa.is_zero()
    assert curve_char3(p).poly == s * s - r ** 3 - r * r + r * 2 + 1


def test_curves_of_delta_type_are_singular():
    for d in (1, 2):
        report = curve_char3(ez(1, 1, 0, 0) if d == 1 else ez(1, 1, 2, 1)).smoothness()
        assert report.smooth is False
        assert report.singular_points


def test_image_examples():
    assert simple_image_char3(ez(1, 1, 2, 1), (2, 1)).render() == "[2, 1)_{3, GF(3)}"
    img = simple_image_char3(ez(1, 0, 0, 1), CurvePoint.scalar(F3(1)))
    assert img.render() == "[2, 1)_{3, GF(3)}"
    assert img.azumaya is False and img.localized
    img = simple_image_char3(enz(1, 0, 1, 1), (1, 0))
    assert img.render() == "[1, 2)_{3, GF(3)}"
    assert img.azumaya is True


def test_image_guards():
    with pytest.raises(PreconditionError):
        simple_image_char3(ez(1, 1, 2, 1), (0, 0))
    with pytest.raises(PreconditionError):
        simple_image_char3(ez(1, 0, 1, 1), (0, 1))        # beta = 0, gamma != 0: swap X and Y
    with pytest.raises(PreconditionError):
        simple_image_char3(ez(1, 0, 0, 1), CurvePoint.scalar(F3(0)))


def _points_with_nonzero_s(p):
    curve = curve_char3(p)
    K = p.field
    return [(r, s) for r in K.elements() for s in K.elements()
            if not s.is_zero() and curve.contains((r, s))]


def test_azumaya_flag_when_kappa_vanishes():
    p = enz(1, 1, 2, 1)                     # kappa = 0, gamma^3 - gamma - alpha = 2
    assert p.kappa.is_zero()
    img = simple_image_char3(p, _points_with_nonzero_s(p)[0])
    assert img.azumaya is None and img.localized
    i = F9.gen
    q = enz(i, 0, i, 0, field=F9)           # gamma^3 - gamma = i = alpha
    assert q.kappa.is_zero()
    img = simple_image_char3(q, _points_with_nonzero_s(q)[0])
    assert img.azumaya is False


def test_swap_turns_gamma_into_beta():
    p = ez(1, 0, 1, 1)
    s = p.swap_xy()
    assert s.beta == F3(1)


def test_normalization_identity_on_normal_shape():
    p = char3_from_coeffs(F3, 0, 1, 1, 2, 1)
    assert p.branch == E_ZERO
    gp = enz(1, 1, 1, 1).general()
    q = normalize_char3(gp)
    assert q.transform == q.transform.identity(F3, 2)
    assert q.coeffs() == (1, 1, 1, 1)


def _phi_value(gp: GeneralPresentation, z, x, y):
    total = z ** 3
    for k, f in enumerate(gp.f, start=1):
        total = total - f.lift(z.field).evaluate([x, y]) * z ** (3 - k)
    return total


def test_normalization_of_pure_cube_by_evaluation():
    p = char3_from_coeffs(F3, 2, 1, 0, 0, 0)      # Z^3 - 2XYZ - X^3
    assert p.branch == E_NONZERO
    M = p.transform
    rng = random.Random(3)
    old = p.original
    new = p.general()
    for _ in range(20):
        z, x, y = (F27.random_element(rng) for _ in range(3))
        xo = x * M[0, 0] + y * M[0, 1]
        yo = x * M[1, 0] + y * M[1, 1]
        assert _phi_value(new, z, x, y) == _phi_value(old, z, xo, yo)


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 2), st.tuples(*[st.integers(0, 2)] * 4))
def test_normalization_round_trip(e, coeffs):
    names = ("X", "Y")
    X, Y = (CommPoly.variable(F3, names, n) for n in names)
    a, b, c, d = coeffs
    f3 = X ** 3 * a + X * X * Y * b + X * Y * Y * c + Y ** 3 * d
    gp = GeneralPresentation(3, 2, [CommPoly(F3, names), X * Y * e, f3], F3)
    try:
        p = normalize_char3(gp)
    except PreconditionError:
        assume(False)
    Mi = p.transform.inverse()
    back = [X * Mi[0, 0] + Y * Mi[0, 1], X * Mi[1, 0] + Y * Mi[1, 1]]
    f = p.f_polys(names)
    assert f[1].substitute(back) == X * Y * e
    assert f[2].substitute(back) == f3
