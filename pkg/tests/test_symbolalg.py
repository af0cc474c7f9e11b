from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from gencliff.cubic3_char0 import CubicPresentation, ring_char0, w_expression
from gencliff.errors import PreconditionError
from gencliff.fieldtower import GF, QQ, adjoin_rho, extend
from gencliff.matrices import Matrix
from gencliff.symbolalg import SymbolAlgebraSpec, phi_map

QRHO = adjoin_rho(QQ)
CYC = SymbolAlgebraSpec.cyclic(2, 5, QRHO)
AS = SymbolAlgebraSpec.artin_schreier(2, 1, GF(3))
AS9 = SymbolAlgebraSpec.artin_schreier(extend(GF(3), [1, 0, 1], "i").gen, 2, extend(GF(3), [1, 0, 1], "i"))


def test_defining_relations():
    u, v = CYC.u(), CYC.v()
    assert v * u == u * v * QRHO.rho
    assert u * u * u == CYC.scalar(2)
    assert v ** 3 == CYC.scalar(5)
    u, v = AS.u(), AS.v()
    assert v * u == u * v + v
    assert u ** 3 - u == AS.scalar(2)
    assert v ** 3 == AS.scalar(1)


def test_rendering():
    assert CYC.render() == "(2, 5)_{3, QQ(rho)}"
    assert AS.render() == "[2, 1)_{3, GF(3)}"
    assert CYC.to_json()["kind"] == "root_of_unity"


def test_regular_representation():
    assert CYC.one().regular_rep() == Matrix.identity(QRHO, 9)
    U = CYC.u().regular_rep()
    for i in range(3):
        for j in range(3):
            col = CYC.index(i, j)
            row = CYC.index((i + 1) % 3, j)
            expected = QRHO(2) if i == 2 else QRHO(1)
            assert U[row, col] == expected
            assert sum(1 for r in range(9) if not U[r, col].is_zero()) == 1
    u_inv = CYC.u() * CYC.u() * QRHO(2).inverse()
    assert U * u_inv.regular_rep() == Matrix.identity(QRHO, 9)
    assert CYC.u().inverse() == u_inv


def test_preconditions():
    with pytest.raises(PreconditionError):
        SymbolAlgebraSpec.cyclic(2, 1, QQ)               # no rho
    with pytest.raises(PreconditionError):
        SymbolAlgebraSpec.cyclic(0, 1, QRHO)
    with pytest.raises(PreconditionError):
        SymbolAlgebraSpec(SymbolAlgebraSpec.artin_schreier(1, 1, GF(3)).kind, 3, 1, 1, QRHO)


def _random(spec, rng):
    return spec.element([spec.field.random_element(rng) for _ in range(9)])


@pytest.mark.parametrize("spec", [CYC, AS, AS9], ids=["cyclic", "as3", "as9"])
@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_associativity_and_distributivity(spec, seed):
    rng = random.Random(seed)
    a, b, c = (_random(spec, rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).regular_rep() == a.regular_rep() * b.regular_rep()


def test_phi_images():
    pres = CubicPresentation.from_coeffs(QRHO, 3, 1, 1, 1, 1, 1, 1)
    phi = phi_map(pres)
    ring = ring_char0(QRHO)
    x, y1 = ring.gen("x"), ring.gen("y1")
    assert phi.apply(x) ** 3 == phi.spec.scalar(pres.alpha)
    assert phi.apply(y1) ** 3 == phi.spec.scalar(phi.S)
    assert phi.apply(w_expression(pres, ring)) == phi.spec.scalar(phi.R)
