from __future__ import annotations

import random
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from gencliff.cubic3_char0 import CubicPresentation, rewrite_system_char0
from gencliff.errors import PreconditionError, VerificationError
from gencliff.fieldtower import GF, QQ, adjoin_rho, extend
from gencliff.matrices import Matrix
from gencliff.ncalg import (MatrixContext, NCRing, RewriteSystem, decompose_artin_schreier,
                            decompose_pcentral, decompose_rho, iterated_commutator, overlap_check,
                            star_product)

QRHO = adjoin_rho(QQ)
RING = NCRing(QQ, ["x", "y", "z"])


def words(p):
    return {RING.word_str(w): c for w, c in p.terms.items()}


def test_star_products_from_the_notation():
    assert set(words(star_product([("x", 2), ("y", 1)], RING))) == {"x^2*y", "x*y*x", "y*x^2"}
    xxzz = star_product([("x", 2), ("z", 2)], RING)
    assert set(words(xxzz)) == {"x^2*z^2", "x*z*x*z", "x*z^2*x", "z*x^2*z", "z*x*z*x", "z^2*x^2"}
    assert set(words(star_product([("x", 1), ("y", 1)], RING))) == {"x*y", "y*x"}


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_star_product_has_multinomial_many_words(counts):
    names = ["x", "y", "z"][:len(counts)]
    p = star_product(list(zip(names, counts)), RING)
    expected = factorial(sum(counts))
    for c in counts:
        expected //= factorial(c)
    assert len(p.terms) == expected
    assert all(c == 1 for c in p.terms.values())


def test_iterated_commutator_conventions():
    ctx = MatrixContext(QQ, 2)
    mu = Matrix.unit(QQ, 2, 0, 1)
    nu = Matrix.diag(QQ, [1, 2])
    assert iterated_commutator(mu, nu, 0, ctx) == mu
    # nu mu - mu nu = E12 - 2 E12
    assert iterated_commutator(mu, nu, 1, ctx) == mu * -1
    assert iterated_commutator(mu, nu, 2, ctx) == mu
    assert iterated_commutator(nu, nu * 3, 4, ctx).is_zero()


def test_decompose_rho_examples():
    rho = QRHO.rho
    ctx = MatrixContext(QRHO, 3)
    x = Matrix.diag(QRHO, [1, rho, rho ** 2])
    y = Matrix.unit(QRHO, 3, 0, 1)
    parts = decompose_rho(y, x, 3, rho, ctx)
    assert parts[1] == y and parts[0].is_zero() and parts[2].is_zero()
    parts = decompose_rho(x, x, 3, rho, ctx)
    assert parts[0] == x and parts[1].is_zero() and parts[2].is_zero()


def test_decompose_rho_refuses_bad_input():
    ctx = MatrixContext(QRHO, 3)
    y = Matrix.identity(QRHO, 3)
    with pytest.raises(PreconditionError):
        decompose_rho(y, Matrix.unit(QRHO, 3, 0, 1), 3, QRHO.rho, ctx)
    with pytest.raises(PreconditionError):
        decompose_rho(y, y, 3, QRHO(1), ctx)


AS_X = Matrix(GF(3), [[0, 0, 1], [1, 0, 1], [0, 1, 0]])   # companion of T^3 - T - 1


def test_artin_schreier_examples():
    ctx = MatrixContext(GF(3), 3)
    assert (AS_X ** 3 - AS_X).scalar_value() == GF(3)(1)
    I = Matrix.identity(GF(3), 3)
    parts = decompose_artin_schreier(I, AS_X, 3, ctx)
    assert parts.z[0] == I and all(z.is_zero() for z in parts.z[1:])
    parts = decompose_artin_schreier(AS_X, AS_X, 3, ctx)
    assert parts.z[0] == AS_X


def test_pcentral_commuting_element():
    y = Matrix(GF(3), [[0, 0, 2], [1, 0, 0], [0, 1, 0]])     # y^3 = 2
    ctx = MatrixContext(GF(3), 3)
    z = y * y + 1
    parts = decompose_pcentral(z, y, 3, ctx)
    assert parts[2] == z and parts[1].is_zero()
    assert parts[2] - parts[1] == z


def test_characteristic_guard():
    with pytest.raises(PreconditionError):
        decompose_artin_schreier(Matrix.identity(QQ, 2), Matrix.identity(QQ, 2), 3, MatrixContext(QQ, 2))


def diagonal_system():
    return rewrite_system_char0(CubicPresentation.from_coeffs(QRHO, alpha=2, delta=1))


def test_rules_of_the_cubic_system():
    rs = diagonal_system()
    ring = rs.ring
    x, y1, y2 = (ring.gen(n) for n in ("x", "y1", "y2"))
    assert rs.normal_form(x ** 3) == ring.scalar(2)
    assert rs.normal_form(y1 * x) == x * y1 * QRHO.rho
    pres = CubicPresentation.from_coeffs(QRHO, 3, 0, 1, 1, 0, 0, 0)   # D1 = 1, D2 = -9
    rs = rewrite_system_char0(pres)
    rho = QRHO.rho
    expected = y2 * y1 * rho + x * x * ((1 - rho) / 3) - (1 - rho) * (QRHO(-9) / 9)
    assert rs.normal_form(y1 * y2) == expected


def test_overlap_audit():
    assert overlap_check(diagonal_system(), 8) == []
    ring = NCRing(QQ, ["x", "y"], precedence=["x", "y"])
    x, y = ring.gen("x"), ring.gen("y")
    assert overlap_check(RewriteSystem(ring, [(ring.word("y", "x"), x * y)])) == []
    bad = RewriteSystem(ring, [(ring.word("x", "x"), ring.one()), (ring.word("x", "x", "x"), ring.zero())])
    assert overlap_check(bad) != []


def test_rules_must_decrease():
    ring = NCRing(QQ, ["x", "y"])
    with pytest.raises(ValueError):
        RewriteSystem(ring, [(ring.word("x",), ring.gen("y") * ring.gen("y"))])


def random_poly(ring, rng, terms=4, max_len=5):
    p = ring.zero()
    for _ in range(terms):
        w = tuple(rng.randrange(len(ring.names)) for _ in range(rng.randint(0, max_len)))
        p = p + ring.monomial(w, rng.randint(-3, 3))
    return p


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_normal_form_is_an_idempotent_ring_map(seed):
    rs = rewrite_system_char0(CubicPresentation.from_coeffs(QRHO, 3, 1, 1, 1, 1, 1, 1))
    rng = random.Random(seed)
    a, b = random_poly(rs.ring, rng), random_poly(rs.ring, rng)
    na, nb = rs.normal_form(a), rs.normal_form(b)
    assert rs.normal_form(na) == na
    assert all(rs.is_normal(w) for w in na.terms)
    assert rs.normal_form(a + b) == na + nb
    assert rs.normal_form(a * b) == rs.normal_form(na * nb)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_decompose_rho_random_gf7(seed):
    K = adjoin_rho(GF(7))
    rng = random.Random(seed)
    x = Matrix(K, [[0, 0, 3], [1, 0, 0], [0, 1, 0]])
    y = Matrix.random(K, 3, rng)
    parts = decompose_rho(y, x, 3, K.rho, MatrixContext(K, 3))
    assert parts[0] + parts[1] + parts[2] == y
    for k, part in enumerate(parts):
        assert part * x == x * part * K.rho ** k


def test_decompose_rho_in_extension_tower():
    K = extend(QRHO, [-2, 0, 0, 1], "c")
    rng = random.Random(7)
    c = K.gen
    x = Matrix.diag(K, [c, c * K.rho, c * K.rho ** 2])
    y = Matrix.random(K, 3, rng)
    parts = decompose_rho(y, x, 3, K.rho, MatrixContext(K, 3))
    assert parts[0] + parts[1] + parts[2] == y


def test_verification_error_type_is_assertion():
    assert issubclass(VerificationError, AssertionError)
