"""Sparse commutative polynomials in named variables over a field tower."""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .fieldtower import Field, FieldElement


class CommPoly:
    """Polynomial as a map from exponent tuples to nonzero coefficients."""

    __slots__ = ("field", "names", "terms")

    def __init__(self, field: Field, names: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.field = field
        self.names = tuple(names)
        out = {}
        for exps, c in (terms or {}).items():
            c = field(c)
            if not c.is_zero():
                out[tuple(exps)] = c
        self.terms = out

    @classmethod
    def _raw(cls, field, names, terms):
        p = cls.__new__(cls)
        p.field, p.names, p.terms = field, names, terms
        return p

    @classmethod
    def constant(cls, field: Field, names: Sequence[str], c) -> CommPoly:
        return cls(field, names, {(0,) * len(names): c})

    @classmethod
    def variable(cls, field: Field, names: Sequence[str], name: str) -> CommPoly:
        names = tuple(names)
        exps = tuple(int(n == name) for n in names)
        if name not in names:
            raise KeyError(name)
        return cls(field, names, {exps: 1})

    def gens(self) -> list[CommPoly]:
        return [CommPoly.variable(self.field, self.names, n) for n in self.names]

    def _coerce(self, other) -> CommPoly | None:
        if isinstance(other, CommPoly):
            if other.names != self.names:
                raise ValueError(f"variable mismatch {self.names} vs {other.names}")
            if other.field is self.field:
                return other
            if self.field.contains_field(other.field):
                return CommPoly(self.field, self.names, other.terms)
            if other.field.contains_field(self.field):
                return None
            raise ValueError("incompatible coefficient fields")
        if isinstance(other, (int, Fraction, FieldElement)) and not isinstance(other, bool):
            return CommPoly.constant(self.field, self.names, other)
        return None

    def _promote(self, other):
        o = self._coerce(other)
        if o is None and isinstance(other, CommPoly):
            return CommPoly(other.field, self.names, self.terms), other
        return self, o

    def __add__(self, other):
        a, b = self._promote(other)
        if b is None:
            return NotImplemented
        out = dict(a.terms)
        for e, c in b.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return CommPoly._raw(a.field, a.names, out)

    __radd__ = __add__

    def __neg__(self):
        return CommPoly._raw(self.field, self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._promote(other)
        if b is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._promote(other)
        if b is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e)
                s = c1 * c2 if s is None else s + c1 * c2
                out[e] = s
        return CommPoly._raw(a.field, a.names, {e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = CommPoly.constant(self.field, self.names, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, CommPoly):
            return self.names == other.names and (self - other).is_zero()
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> FieldElement:
        return self.terms.get(tuple(exps), self.field.zero_element())

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.names.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def homogeneous_part(self, degree: int) -> CommPoly:
        return CommPoly._raw(self.field, self.names,
                             {e: c for e, c in self.terms.items() if sum(e) == degree})

    def coefficient_in(self, name: str, power: int) -> CommPoly:
        """Coefficient of ``name**power``, a polynomial in the other variables (same names)."""
        i = self.names.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                out[e[:i] + (0,) + e[i + 1:]] = c
        return CommPoly._raw(self.field, self.names, out)

    def partial(self, name: str) -> CommPoly:
        i = self.names.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                c2 = c * e[i]
                if not c2.is_zero():
                    out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c2
        return CommPoly._raw(self.field, self.names, out)

    def evaluate(self, values: Sequence):
        """Substitute ``values`` (field elements, matrices, polynomials...) for the variables."""
        values = list(values)
        if len(values) != len(self.names):
            raise ValueError("wrong number of values")
        total = None
        cache: dict = {}
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = values[i] ** k
                    term = term * cache[key]
            total = term if total is None else total + term
        if total is None:
            return self.field.zero_element()
        return total

    def substitute(self, polys: Sequence[CommPoly]) -> CommPoly:
        """Compose with polynomials, all in one common set of variables."""
        polys = list(polys)
        names = polys[0].names
        field = polys[0].field
        for q in polys:
            if self.field.contains_field(q.field) and not q.field.contains_field(self.field):
                field = self.field
        acc = CommPoly(field, names)
        for e, c in self.terms.items():
            term = CommPoly.constant(field, names, c)
            for q, k in zip(polys, e):
                if k:
                    term = term * (q ** k)
            acc = acc + term
        return acc

    def rename(self, names: Sequence[str]) -> CommPoly:
        return CommPoly._raw(self.field, tuple(names), dict(self.terms))

    def lift(self, field: Field) -> CommPoly:
        return CommPoly(field, self.names, self.terms)

    def univariate(self, name: str) -> list[FieldElement]:
        """Coefficient list (lowest first) of a polynomial in ``name`` alone."""
        i = self.names.index(name)
        deg = max(self.degree_in(name), 0)
        out = [self.field.zero_element() for _ in range(deg + 1)]
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError(f"polynomial involves variables other than {name}")
            out[e[i]] = c
        return out

    def monomial_str(self, exps: Sequence[int]) -> str:
        parts = []
        for n, k in zip(self.names, exps):
            if k == 1:
                parts.append(n)
            elif k > 1:
                parts.append(f"{n}^{k}")
        return "*".join(parts) or "1"

    def sorted_terms(self) -> list[tuple[tuple, FieldElement]]:
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), [-k for k in t[0]]))

    def __str__(self):
        from .fieldtower import _is_atomic, _join_terms
        terms = []
        for e, c in self.sorted_terms():
            mon = self.monomial_str(e)
            cs = str(c)
            if mon == "1":
                terms.append(cs if _is_atomic(cs) else f"({cs})")
            elif c.is_one():
                terms.append(mon)
            elif (-c).is_one():
                terms.append("-" + mon)
            elif _is_atomic(cs):
                terms.append(f"{cs}*{mon}")
            else:
                terms.append(f"({cs})*{mon}")
        return _join_terms(terms)

    def __repr__(self):
        return f"CommPoly({self})"

    def to_json(self) -> dict[str, str]:
        return {self.monomial_str(e): str(c) for e, c in self.sorted_terms()}


def monomials(nvars: int, degree: int):
    """All exponent tuples of the given total degree."""
    if nvars == 1:
        yield (degree,)
        return
    for k in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - k):
            yield (k,) + rest


def grid(values: Sequence, nvars: int):
    return product(values, repeat=nvars)
