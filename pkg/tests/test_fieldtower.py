from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from gencliff.fieldtower import (GF, QQ, UNDECIDED, FieldError, RationalFunctionField, adjoin_rho,
                                 extend, find_irreducible, has_cube_root, is_irreducible, make_field,
                                 poly_roots)

QRHO = adjoin_rho(QQ)
GF9 = extend(GF(3), [1, 0, 1], "i")
TOWER = extend(QRHO, [-2, 0, 0, 1], "c")
RAT = RationalFunctionField(GF(5), "t")
FIELDS = [QQ, GF(7), QRHO, GF9, TOWER, RAT]


def test_rho_over_rationals_is_a_quadratic_extension():
    assert QRHO.name == "QQ(rho)"
    assert QRHO.minpoly == tuple(QQ(c).raw for c in (1, 1, 1))


def test_rho_in_gf7_needs_no_extension():
    K = adjoin_rho(GF(7))
    assert K.order() == 7
    assert K.rho in (K(2), K(4))
    assert (K.rho ** 2 + K.rho + 1).is_zero()


def test_gf4_has_four_elements():
    K = extend(GF(2), [1, 1, 1], "w")
    assert len(list(K.elements())) == 4


def test_small_arithmetic():
    rho = QRHO.rho
    assert rho * rho == -1 - rho
    assert (1 + rho).inverse() == -rho
    assert GF(3)(2).inverse() == GF(3)(2)
    assert str(rho * rho) == "-rho - 1"


def test_cube_roots():
    assert has_cube_root(QQ(8)) == QQ(2)
    assert has_cube_root(QRHO(2)) is None
    assert has_cube_root(QQ(Fraction(-27, 8))) == QQ(Fraction(-3, 2))
    for K in (GF(3), GF9):
        for a in K.elements():
            if not a.is_zero():
                root = has_cube_root(a)
                assert root is not None and root is not UNDECIDED and root ** 3 == a


def test_reducible_minpoly_rejected():
    with pytest.raises(FieldError):
        extend(QQ, [-4, 0, 1], "s")


def test_irreducibility_and_roots():
    assert is_irreducible(GF(3), [2, 2, 0, 1])         # T^3 - T - 1
    assert not is_irreducible(GF(3), [0, 2, 0, 1])     # T^3 - T
    assert sorted(int(r.raw) for r in poly_roots(GF(3), [0, 2, 0, 1])) == [0, 1, 2]
    f = find_irreducible(GF(2), 3)
    assert is_irreducible(GF(2), f)


def test_make_field():
    K = make_field(prime=3, extensions=[([1, 0, 1], "i")])
    assert K.order() == 9
    L = make_field(adjoin_rho_=True)
    assert L.rho is not None


def _element(K, seed):
    return K.random_element(random.Random(seed))


@pytest.mark.parametrize("K", FIELDS, ids=lambda K: K.name)
@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 9), st.integers(0, 10 ** 9), st.integers(0, 10 ** 9))
def test_field_axioms(K, s1, s2, s3):
    a, b, c = (_element(K, s) for s in (s1, s2, s3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == K.zero_element()
    assert a * 1 == a
    if not a.is_zero():
        assert a * a.inverse() == K.one_element()
        assert (b / a) * a == b


T = sympy.symbols("T")


def _to_sympy(e):
    return sum(sympy.Rational(c.to_fraction().numerator, c.to_fraction().denominator) * T ** i
               for i, c in enumerate(e.coordinates()))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 9), st.integers(0, 10 ** 9))
def test_rho_arithmetic_matches_sympy(s1, s2):
    # independent oracle: polynomial remainder modulo T^2 + T + 1
    a, b = _element(QRHO, s1), _element(QRHO, s2)
    m = T ** 2 + T + 1
    assert sympy.expand(_to_sympy(a * b) - sympy.rem(_to_sympy(a) * _to_sympy(b), m, T)) == 0
    if not a.is_zero():
        assert sympy.expand(_to_sympy(a.inverse()) - sympy.invert(_to_sympy(a), m, T)) == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 9), st.integers(0, 10 ** 9))
def test_gf9_arithmetic_matches_sympy(s1, s2):
    a, b = _element(GF9, s1), _element(GF9, s2)
    m = sympy.Poly(T ** 2 + 1, T, modulus=3)
    pa = sympy.Poly([int(c.raw) for c in reversed(a.coordinates())], T, modulus=3)
    pb = sympy.Poly([int(c.raw) for c in reversed(b.coordinates())], T, modulus=3)
    expect = (pa * pb).rem(m)
    got = sympy.Poly([int(c.raw) for c in reversed((a * b).coordinates())], T, modulus=3)
    assert (expect - got).is_zero


def test_rational_function_field_normalizes():
    t = RAT.gen
    f = (t * t - 1) / (t - 1)
    assert f == t + 1
    assert ((t + 2) / (t * 3)).inverse() == (t * 3) / (t + 2)


def test_tower_descends_and_lifts():
    c = TOWER.gen
    assert c ** 3 == TOWER(2)
    assert TOWER.contains_field(QRHO) and TOWER.contains_field(QQ)
    x = TOWER(QRHO.rho)
    assert x * x + x + 1 == TOWER.zero_element()
    assert (c ** 3).descend().field == QQ
