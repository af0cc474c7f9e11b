"""Verification of matrix representations of generalized Clifford algebras.

A presentation is ``Phi(Z, X_1..X_n) = Z^d - sum_k f_k(X) Z^(d-k)`` with each
``f_k`` homogeneous of degree ``k``.  A tuple ``A_1..A_n`` of matrices is a
representation when ``M(X) = sum X_j A_j`` satisfies ``Phi(M(X), X) = 0`` as a
polynomial identity; comparing coefficients of ``X^mu`` turns this into one
matrix relation per multi-index ``mu`` with ``|mu| = d``.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterable, Sequence

from .commpoly import CommPoly, monomials
from .errors import PreconditionError
from .fieldtower import Field, FieldElement, extend, find_irreducible
from .matrices import Matrix
from .ncalg import NCRing, star_product


@dataclass
class GeneralPresentation:
    d: int
    n: int
    f: list            # f[k-1] is f_k, a CommPoly in the X names
    field: Field

    def __post_init__(self):
        if self.d < 1 or self.n < 1:
            raise ValueError("need d >= 1 and n >= 1")
        if len(self.f) != self.d:
            raise ValueError(f"expected {self.d} polynomials f_1..f_d")
        for k, fk in enumerate(self.f, start=1):
            if len(fk.names) != self.n:
                raise ValueError("every f_k must use the same n variables")
            if not fk.is_homogeneous(k):
                raise ValueError(f"f_{k} = {fk} is not homogeneous of degree {k}")

    @property
    def names(self) -> tuple:
        return self.f[0].names

    @classmethod
    def from_polys(cls, field: Field, names: Sequence[str], f: Sequence) -> GeneralPresentation:
        polys = [p if isinstance(p, CommPoly) else CommPoly.constant(field, names, p) for p in f]
        return cls(len(polys), len(names), polys, field)

    def phi_poly(self) -> CommPoly:
        names = ("Z",) + tuple(self.names)
        Z = CommPoly.variable(self.field, names, "Z")
        total = Z ** self.d
        for k, fk in enumerate(self.f, start=1):
            lifted = CommPoly(fk.field, names, {(0,) + e: c for e, c in fk.terms.items()})
            total = total - lifted * Z ** (self.d - k)
        return total

    def __str__(self):
        return str(self.phi_poly())

    def multi_indices(self) -> list[tuple]:
        return list(monomials(self.n, self.d))

    def relation(self, mu: Sequence[int], gens: Sequence, one):
        """Coefficient of ``X^mu`` in ``Phi(sum X_j g_j, X)`` for elements ``g_j``."""
        mu = tuple(mu)
        total = _star(gens, mu, one)
        for k, fk in enumerate(self.f, start=1):
            for nu, c in fk.terms.items():
                rest = tuple(m - v for m, v in zip(mu, nu))
                if min(rest) < 0:
                    continue
                total = total - c * _star(gens, rest, one)
        return total

    def defining_relations(self, gens: Sequence, one) -> list[tuple[tuple, object]]:
        return [(mu, self.relation(mu, gens, one)) for mu in self.multi_indices()]

    def nc_relations(self, ring: NCRing | None = None) -> list[tuple[tuple, object]]:
        if ring is None:
            ring = NCRing(self.field, [n.lower() for n in self.names])
        return self.defining_relations(ring.gens(), ring.one())

    def to_json(self) -> dict:
        return {"d": self.d, "n": self.n, "names": list(self.names),
                "f": [fk.to_json() for fk in self.f]}


def _star(gens: Sequence, mu: tuple, one):
    factors = [(g, m) for g, m in zip(gens, mu) if m]
    if not factors:
        return one
    return star_product(factors)


@dataclass
class MatrixRep:
    """Images ``A_1..A_n`` of the generators, all ``m x m`` over one field."""

    matrices: list

    def __post_init__(self):
        if not self.matrices:
            raise ValueError("empty representation")
        shapes = {A.shape for A in self.matrices}
        if len(shapes) != 1:
            raise ValueError(f"matrices of different shapes: {sorted(shapes)}")
        n, m = shapes.pop()
        if n != m:
            raise ValueError("representation matrices must be square")
        field = self.matrices[0].field
        for A in self.matrices[1:]:
            if A.field.contains_field(field):
                field = A.field
        self.matrices = [A.lift(field) for A in self.matrices]

    @property
    def field(self) -> Field:
        return self.matrices[0].field

    @property
    def dim(self) -> int:
        return self.matrices[0].nrows

    def conjugate(self, Q: Matrix) -> MatrixRep:
        Qi = Q.inverse()
        return MatrixRep([Q * A * Qi for A in self.matrices])

    def combination(self, coeffs: Sequence) -> Matrix:
        total = Matrix.zero(self.field, self.dim)
        for a, A in zip(coeffs, self.matrices):
            total = total + A * a
        return total

    def to_json(self) -> list:
        return [A.to_strings() for A in self.matrices]


@dataclass
class RepVerdict:
    ok: bool
    witness: tuple | None = None     # (multi-index, nonzero coefficient matrix)

    def __bool__(self):
        return self.ok


def _check_rep(gp: GeneralPresentation, rep: MatrixRep) -> None:
    if len(rep.matrices) != gp.n:
        raise ValueError(f"expected {gp.n} matrices, got {len(rep.matrices)}")
    if not rep.field.contains_field(gp.field):
        raise ValueError(f"matrices over {rep.field.name} do not extend {gp.field.name}")


def is_representation(gp: GeneralPresentation, rep: MatrixRep) -> RepVerdict:
    """Check ``Phi(sum X_j A_j, X) = 0`` identically in the X_j."""
    _check_rep(gp, rep)
    one = Matrix.identity(rep.field, rep.dim)
    for mu in gp.multi_indices():
        rel = gp.relation(mu, rep.matrices, one)
        if not rel.is_zero():
            return RepVerdict(False, (mu, rel))
    return RepVerdict(True)


def evaluate_at(gp: GeneralPresentation, rep: MatrixRep, point: Sequence) -> Matrix:
    """``Phi(sum a_j A_j, a)`` for scalars ``a``."""
    L = rep.field
    a = [L(x) for x in point]
    M = rep.combination(a)
    total = M ** gp.d
    for k, fk in enumerate(gp.f, start=1):
        total = total - M ** (gp.d - k) * L(fk.lift(L).evaluate(a))
    return total


def _grid_values(L: Field, count: int) -> tuple[Field, list[FieldElement]]:
    """``count`` distinct elements of L, or of a finite extension of it."""
    q = L.order()
    if q is None or q >= count:
        if q is None or L.characteristic == 0:
            return L, [L(i) for i in range(count)]
        return L, list(L.elements())[:count]
    k = 2
    while q ** k < count:
        k += 1
    big = extend(L, find_irreducible(L, k), "g")
    return big, list(big.elements())[:count]


def minimal_poly_check(gp: GeneralPresentation, rep: MatrixRep) -> bool:
    """True when ``I, M, ..., M^(d-1)`` are independent over the function field.

    Equivalently no monic polynomial of degree < d annihilates ``M(X)``.
    Each d x d minor of the stacked coefficient matrix is a polynomial of
    degree at most ``D = d(d-1)/2``; a nonzero one cannot vanish on a grid
    ``S^n`` with ``|S| > D``, so sampling that grid decides the rank exactly.
    """
    _check_rep(gp, rep)
    d = gp.d
    if d <= 1:
        return True
    D = d * (d - 1) // 2
    L, values = _grid_values(rep.field, D + 1)
    mats = [A.lift(L) for A in rep.matrices]
    m = rep.dim
    for point in product(values, repeat=gp.n):
        M = Matrix.zero(L, m)
        for a, A in zip(point, mats):
            M = M + A * a
        powers = [Matrix.identity(L, m)]
        for _ in range(d - 1):
            powers.append(powers[-1] * M)
        vecs = [[x for row in P.rows for x in row] for P in powers]
        if Matrix._raw(L, tuple(tuple(v) for v in vecs)).rank() == d:
            return True
    return False


def divisibility_audit(gp: GeneralPresentation, m: int) -> str:
    """Dimension gate for absolutely irreducible Phi: ``m`` must be a multiple of d."""
    return "permitted" if m % gp.d == 0 else "impossible"


def random_point_agreement(gp: GeneralPresentation, rep: MatrixRep, trials: int,
                           rng: random.Random, field: Field | None = None) -> bool:
    """Compare the identity verdict with substitutions at random scalar points.

    An accepted representation must vanish at every point; a rejected one
    must fail somewhere (over a large enough field the sampled points find
    it with high probability).
    """
    verdict = is_representation(gp, rep).ok
    L = field or rep.field
    lifted = MatrixRep([A.lift(L) for A in rep.matrices])
    zeros = [evaluate_at(gp, lifted, [L.random_element(rng) for _ in range(gp.n)]).is_zero()
             for _ in range(trials)]
    return all(zeros) if verdict else not all(zeros)


def search_representations(gp: GeneralPresentation, m: int) -> list[MatrixRep]:
    """Every representation by m x m matrices over a finite base field.

    Candidates for each generator are first filtered by the single-variable
    relation ``Phi(A_j, e_j) = 0``.
    """
    K = gp.field
    if K.order() is None:
        raise PreconditionError("exhaustive search needs a finite field")
    elems = list(K.elements())
    one = Matrix.identity(K, m)
    candidates = []
    for j in range(gp.n):
        mu = tuple(gp.d if i == j else 0 for i in range(gp.n))
        keep = []
        for entries in product(elems, repeat=m * m):
            A = Matrix._raw(K, tuple(tuple(entries[r * m:(r + 1) * m]) for r in range(m)))
            gens = [A if i == j else one * 0 for i in range(gp.n)]
            if gp.relation(mu, gens, one).is_zero():
                keep.append(A)
        candidates.append(keep)
    found = []
    for combo in product(*candidates):
        rep = MatrixRep(list(combo))
        if is_representation(gp, rep).ok:
            found.append(rep)
    return found


def projective_singular_points(gp: GeneralPresentation, field: Field) -> list[tuple]:
    """Singular points of ``Phi = 0`` in projective space over a finite field.

    Used as a heuristic witness for absolute irreducibility: a plane curve
    without singular points over the algebraic closure is irreducible there.
    """
    if field.order() is None:
        raise PreconditionError("singular-point search needs a finite field")
    phi = gp.phi_poly().lift(field)
    partials = [phi.partial(n) for n in phi.names]
    out = []
    for pt in product(list(field.elements()), repeat=len(phi.names)):
        nz = next((c for c in pt if not c.is_zero()), None)
        if nz is None or not nz.is_one():
            continue
        if phi.evaluate(pt).is_zero() and all(p.evaluate(pt).is_zero() for p in partials):
            out.append(pt)
    return out


def load_matrices(text: str, field: Field, parse_scalar) -> MatrixRep:
    """Matrix file: a JSON list of matrices whose entries are field-element strings."""
    data = json.loads(text)
    if not isinstance(data, list) or not data:
        raise ValueError("matrix file must hold a non-empty JSON list")
    mats = []
    for M in data:
        rows = [[parse_scalar(str(x), field) for x in row] for row in M]
        mats.append(Matrix(field, rows))
    return MatrixRep(mats)


def multinomial_count(mu: Iterable[int]) -> int:
    mu = list(mu)
    total, out = 0, 1
    for m in mu:
        total += m
        out *= comb(total, m)
    return out
