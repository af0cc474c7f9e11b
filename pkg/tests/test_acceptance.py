"""Acceptance suite: nine criteria, each a plain function raising AssertionError on failure.

Run under pytest (a summary line per criterion is printed at the end) or
directly with ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import contextlib
import io
import random
import sys
from fractions import Fraction

from gencliff.cli import main as cli_main
from gencliff.cubic3_char0 import (CubicPresentation, build_representation, rewrite_system_char0,
                                   simple_image, verify_identities, verify_centrality, verify_phi)
from gencliff.cubic3_char3 import (Char3Presentation, rewrite_system_char3, simple_image_char3,
                                   verify_central_char3, verify_decomposition)
from gencliff.curves import CurvePoint
from gencliff.fieldtower import GF, QQ, adjoin_rho, extend
from gencliff.matrices import Matrix
from gencliff.ncalg import (MatrixContext, decompose_artin_schreier, decompose_pcentral,
                            decompose_rho, overlap_check)
from gencliff.parsing import parse_phi_general
from gencliff.repcheck import (MatrixRep, evaluate_at, is_representation, minimal_poly_check,
                               search_representations)

QRHO = adjoin_rho(QQ)
F3 = GF(3)
F9 = extend(F3, [1, 0, 1], "i")

CHAR0_COEFFS = [(0, 0, 1, 2, 0, 0, 1), (0, 0, 0, 2, 0, 0, 1), (3, 0, 1, 1, 0, 0, 0),
                (3, 1, 1, 1, 1, 1, 1), (0, 1, 0, 2, 1, 1, 1)]


def char0_presentations():
    return [CubicPresentation.from_coeffs(QRHO, *c) for c in CHAR0_COEFFS]


def char3_presentations():
    i = F9.gen
    return [
        Char3Presentation.e_zero(F3, 1, 1, 2, 1),
        Char3Presentation.e_zero(F3, 2, 1, 1, 2),
        Char3Presentation.e_zero(F3, 1, 0, 0, 1),
        Char3Presentation.normalized(F3, 1, 0, 1, 1),
        Char3Presentation.normalized(F3, 1, 1, 1, 2),
        Char3Presentation.e_zero(F9, i, 1, i + 1, 2),
        Char3Presentation.normalized(F9, i, i, 0, 1),
    ]


def _assert_report(report, label):
    bad = [f"{c.name} ({c.detail})" for c in report.checks if not c.ok]
    assert not bad, f"{label}: failed checks {bad}"


def criterion_1():
    """All nine commutators of {w, y1^3, y2^3} with {x, y1, y2} reduce to 0."""
    for p in char0_presentations():
        report = verify_centrality(p, rewrite_system_char0(p))
        assert len(report.checks) == 9
        _assert_report(report, p.coeff_dict())


def criterion_2():
    """D + y1^3 + y2^3 - rho^2 e w and the four original relations reduce to 0."""
    for p in char0_presentations():
        report = verify_identities(p, rewrite_system_char0(p))
        names = {c.name for c in report.checks}
        assert "D + y1^3 + y2^3 - rho^2 e w" in names
        assert {"x^3 = alpha", "x^2*y relation", "x*y^2 relation", "y^3 relation"} <= names
        _assert_report(report, p.coeff_dict())


def criterion_3():
    """The 27 monomials x^i y1^j w^k have independent images; phi(w) = R, phi(y1)^3 = S."""
    for p in char0_presentations()[:3]:
        report = verify_phi(p)
        rank = report.get("27 images independent over F")
        assert rank.detail == "rank 27"
        assert report.get("phi(w) = R").ok and report.get("phi(y1)^3 = S").ok
        _assert_report(report, p.coeff_dict())


def criterion_4():
    """End-to-end 3x3 representation at (0, 1) for alpha = 2, delta = 1."""
    p = CubicPresentation.from_coeffs(QRHO, alpha=2, delta=1)
    rep = build_representation(p, (0, 1))
    L = rep.field
    assert L.base is QRHO and L.degree == 3 and L.gen ** 3 == 2      # QQ(rho, 2^(1/3))
    X, Y = rep.matrices
    I = Matrix.identity(L, 3)
    assert X ** 3 == I * 2
    assert Y ** 3 == I
    gp = p.general()
    # the four relations are the coefficients of a1^3, a1^2 a2, a1 a2^2, a2^3
    verdict = is_representation(gp, rep)
    assert verdict.ok, f"relation failure at {verdict.witness}"
    rng = random.Random(2024)
    for _ in range(20):
        a = [L(Fraction(rng.randint(-50, 50), rng.randint(1, 30))) for _ in range(2)]
        assert evaluate_at(gp, rep, a).is_zero(), a


def _cli_exit(argv):
    with contextlib.redirect_stdout(io.StringIO()):
        return cli_main(argv + ["--json"])


def criterion_5():
    """Images (2,1)_3 at (0,1), (1,2)_3 at (0,0); refusal (exit 2) for D = 0 and a cube alpha."""
    p = CubicPresentation.from_coeffs(QRHO, alpha=2, delta=1)
    assert simple_image(p, (0, 1)).render() == "(2, 1)_{3, QQ(rho)}"
    assert simple_image(p, (0, 0)).render() == "(1, 2)_{3, QQ(rho)}"
    assert _cli_exit(["image", "--coeffs", "0,0,0,2,0,0,1", "--point", "0,1"]) == 0
    assert _cli_exit(["image", "--coeffs", "0,0,0,1,0,0,0", "--point", "0,0"]) == 2
    assert _cli_exit(["image", "--coeffs", "0,0,0,8,0,0,1", "--point", "0,1"]) == 2


def criterion_6():
    """Characteristic-3 identity suite over GF(3) and GF(9), plus the three image examples."""
    seen = set()
    for p in char3_presentations():
        seen.add((p.field.name, p.branch))
        rs = rewrite_system_char3(p)
        _assert_report(verify_central_char3(p, rs), (p.branch, p.coeff_dict()))
        _assert_report(verify_decomposition(p, rs), (p.branch, p.coeff_dict()))
    assert len(seen) == 4
    ez = Char3Presentation.e_zero
    assert simple_image_char3(ez(F3, 1, 1, 2, 1), (2, 1)).render() == "[2, 1)_{3, GF(3)}"
    img = simple_image_char3(ez(F3, 1, 0, 0, 1), CurvePoint.scalar(F3(1)))
    assert img.render() == "[2, 1)_{3, GF(3)}"
    img = simple_image_char3(Char3Presentation.normalized(F3, 1, 0, 1, 1), (1, 0))
    assert img.render() == "[1, 2)_{3, GF(3)}"


def criterion_7():
    """Decomposition lemmas on random matrices."""
    rng = random.Random(7)
    F7 = adjoin_rho(GF(7))

    def rational_matrix():
        return Matrix(QRHO, [[QRHO(Fraction(rng.randint(-9, 9), rng.randint(1, 5))) + QRHO.rho * rng.randint(-3, 3)
                              for _ in range(3)] for _ in range(3)])

    cases = [(QRHO, Matrix.diag(QRHO, [1, QRHO.rho, QRHO.rho ** 2]) * 2, rational_matrix),
             (F7, Matrix(F7, [[0, 0, 3], [1, 0, 0], [0, 1, 0]]), lambda: Matrix.random(F7, 3, rng))]
    for K, x, sample in cases:
        ctx = MatrixContext(K, 3)
        for _ in range(100):
            y = sample()
            parts = decompose_rho(y, x, 3, K.rho, ctx)
            assert parts[0] + parts[1] + parts[2] == y
            for k, part in enumerate(parts):
                assert part * x == x * part * K.rho ** k
    ctx = MatrixContext(F3, 3)
    x = Matrix(F3, [[0, 0, 1], [1, 0, 1], [0, 1, 0]])       # companion of T^3 - T - 1
    for _ in range(100):
        z = Matrix.random(F3, 3, rng)
        parts = decompose_artin_schreier(z, x, 3, ctx)
        assert parts.z[0] + parts.z[1] + parts.z[2] == z
        for k, zk in enumerate(parts.z):
            assert x * zk - zk * x == zk * k
    y = Matrix(F3, [[0, 0, 2], [1, 0, 0], [0, 1, 0]])       # y^3 = 2 is central
    for _ in range(100):
        z = Matrix.random(F3, 3, rng)
        parts = decompose_pcentral(z, y, 3, ctx)
        assert y * parts[0] == parts[0] * y
        for k in (1, 2):
            assert y * parts[k] - parts[k] * y == parts[k - 1]
        assert parts[2] - parts[1] == z


def criterion_8():
    """No unresolved overlap up to length 8 in any rewrite system of criteria 1 and 6."""
    systems = [rewrite_system_char0(p) for p in char0_presentations()]
    systems += [rewrite_system_char3(p) for p in char3_presentations()]
    for rs in systems:
        bad = overlap_check(rs, 8)
        assert bad == [], [a.describe(rs.ring) for a in bad]


def criterion_9():
    """Accepted representations, exhaustive 2x2 search over GF(3), conjugation invariance."""
    p = CubicPresentation.from_coeffs(QRHO, alpha=2, delta=1)
    gp = p.general()
    reps = [build_representation(p, pt) for pt in ((0, 1), (0, 0))]
    for rep in reps:
        assert is_representation(gp, rep).ok
        assert minimal_poly_check(gp, rep)
    hard = parse_phi_general("Z^3 - X*Y*Z - (X^3 + Y^3)", F3)
    assert search_representations(hard, 2) == []
    rep = reps[0]
    L = rep.field
    basis = [L(1), L(QRHO.rho), L.gen]
    rng = random.Random(9)
    broken = MatrixRep([rep.matrices[0], rep.matrices[1] + Matrix.unit(L, 3, 0, 0)])
    for _ in range(20):
        Q = Matrix.zero(L, 3)
        while Q.det().is_zero():
            Q = Matrix(L, [[sum((b * rng.randint(-3, 3) for b in basis), L(0)) for _ in range(3)]
                           for _ in range(3)])
        assert is_representation(gp, rep.conjugate(Q)).ok
        assert not is_representation(gp, broken.conjugate(Q)).ok


CRITERIA = {
    1: ("centrality of w, y1^3, y2^3", criterion_1),
    2: ("identity suite in characteristic 0", criterion_2),
    3: ("function-field oracle independence", criterion_3),
    4: ("explicit representation end to end", criterion_4),
    5: ("image classification and refusals", criterion_5),
    6: ("characteristic-3 identity suite and images", criterion_6),
    7: ("decomposition lemmas on random matrices", criterion_7),
    8: ("confluence audit", criterion_8),
    9: ("representation checker", criterion_9),
}


def test_criterion_1_centrality():
    criterion_1()


def test_criterion_2_identity_suite():
    criterion_2()


def test_criterion_3_oracle_independence():
    criterion_3()


def test_criterion_4_representation_end_to_end():
    criterion_4()


def test_criterion_5_image_classification():
    criterion_5()


def test_criterion_6_char3_suite():
    criterion_6()


def test_criterion_7_decomposition_lemmas():
    criterion_7()


def test_criterion_8_confluence_audit():
    criterion_8()


def test_criterion_9_repcheck():
    criterion_9()


def run_all() -> int:
    failures = 0
    for n, (label, fn) in CRITERIA.items():
        try:
            fn()
            status = "PASS"
        except AssertionError as exc:
            failures += 1
            status = f"FAIL ({exc})"
        print(f"criterion {n} [{label}]: {status}", flush=True)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(run_all())
