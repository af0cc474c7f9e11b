"""Dense matrices over a field tower, with exact elimination."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .fieldtower import Field, FieldElement


class Matrix:
    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence]):
        self.field = field
        self.rows = tuple(tuple(field(x) for x in row) for row in rows)
        if len({len(r) for r in self.rows}) > 1:
            raise ValueError("ragged matrix")

    @classmethod
    def _raw(cls, field, rows):
        m = cls.__new__(cls)
        m.field, m.rows = field, rows
        return m

    @classmethod
    def zero(cls, field: Field, n: int, m: int | None = None) -> Matrix:
        z = field.zero_element()
        return cls._raw(field, tuple((z,) * (n if m is None else m) for _ in range(n)))

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls.diag(field, [1] * n)

    @classmethod
    def diag(cls, field: Field, entries: Sequence) -> Matrix:
        n = len(entries)
        z = field.zero_element()
        return cls._raw(field, tuple(
            tuple(field(entries[i]) if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def unit(cls, field: Field, n: int, i: int, j: int) -> Matrix:
        """Matrix unit with a single 1 at (i, j), zero-based."""
        return cls(field, [[int(r == i and c == j) for c in range(n)] for r in range(n)])

    @classmethod
    def random(cls, field: Field, n: int, rng, m: int | None = None) -> Matrix:
        return cls._raw(field, tuple(
            tuple(field.random_element(rng) for _ in range(n if m is None else m))
            for _ in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def lift(self, field: Field) -> Matrix:
        if field is self.field:
            return self
        return Matrix(field, self.rows)

    def _common(self, other: Matrix) -> tuple[Matrix, Matrix]:
        if other.field is self.field:
            return self, other
        if self.field.contains_field(other.field):
            return self, other.lift(self.field)
        return self.lift(other.field), other

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return self + self.scalar(other)
        a, b = self._common(other)
        if a.shape != b.shape:
            raise ValueError("shape mismatch")
        return Matrix._raw(a.field, tuple(tuple(x + y for x, y in zip(r, s))
                                          for r, s in zip(a.rows, b.rows)))

    __radd__ = __add__

    def __neg__(self):
        return Matrix._raw(self.field, tuple(tuple(-x for x in r) for r in self.rows))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scalar(self, c) -> Matrix:
        """``c`` times the identity of this size."""
        return Matrix.diag(self.field if not isinstance(c, FieldElement) or self.field.contains_field(c.field)
                           else c.field, [c] * self.nrows)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            a, b = self._common(other)
            if a.shape[1] != b.shape[0]:
                raise ValueError("shape mismatch")
            K = a.field
            cols = list(zip(*b.rows))
            z = K.zero
            out = []
            for r in a.rows:
                rr = [x.raw for x in r]
                row = []
                for col in cols:
                    acc = z
                    for x, y in zip(rr, col):
                        if x != z and y.raw != z:
                            acc = K.add(acc, K.mul(x, y.raw))
                    row.append(FieldElement(K, acc))
                out.append(tuple(row))
            return Matrix._raw(K, tuple(out))
        if isinstance(other, (int, Fraction, FieldElement)) and not isinstance(other, bool):
            return Matrix._raw(*self._scaled(other))
        return NotImplemented

    def _scaled(self, c):
        K = self.field
        if isinstance(c, FieldElement) and not K.contains_field(c.field):
            K = c.field
            rows = Matrix(K, self.rows).rows
        else:
            rows = self.rows
        c = K(c)
        return K, tuple(tuple(c * x for x in r) for r in rows)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)) and not isinstance(other, bool):
            return Matrix._raw(*self._scaled(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Matrix):
            if self.shape != other.shape:
                return False
            return all(x == y for r, s in zip(self.rows, other.rows) for x, y in zip(r, s))
        if isinstance(other, (int, Fraction, FieldElement)):
            return self == self.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def transpose(self) -> Matrix:
        return Matrix._raw(self.field, tuple(zip(*self.rows)))

    def scalar_value(self) -> FieldElement | None:
        """``c`` if this is ``c`` times the identity, else None."""
        n, m = self.shape
        if n != m:
            return None
        c = self.rows[0][0]
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if (x != c) if i == j else not x.is_zero():
                    return None
        return c

    def _echelon(self) -> tuple[list[list[FieldElement]], list[int]]:
        m = [list(r) for r in self.rows]
        pivots = []
        row = 0
        nrows, ncols = self.shape
        for col in range(ncols):
            piv = next((r for r in range(row, nrows) if not m[r][col].is_zero()), None)
            if piv is None:
                continue
            m[row], m[piv] = m[piv], m[row]
            inv = m[row][col].inverse()
            m[row] = [inv * x for x in m[row]]
            for r in range(nrows):
                if r != row and not m[r][col].is_zero():
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[row])]
            pivots.append(col)
            row += 1
            if row == nrows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self._echelon()[1])

    def det(self) -> FieldElement:
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self.rows]
        det = self.field.one_element()
        for c in range(n):
            piv = next((r for r in range(c, n) if not a[r][c].is_zero()), None)
            if piv is None:
                return self.field.zero_element()
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = -det
            det = det * a[c][c]
            inv = a[c][c].inverse()
            for r in range(c + 1, n):
                if not a[r][c].is_zero():
                    f = a[r][c] * inv
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return det

    def inverse(self) -> Matrix:
        n, m = self.shape
        if n != m:
            raise ValueError("inverse of a non-square matrix")
        K = self.field
        aug = Matrix._raw(K, tuple(r + Matrix.identity(K, n).rows[i] for i, r in enumerate(self.rows)))
        ech, pivots = aug._echelon()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Matrix._raw(K, tuple(tuple(r[n:]) for r in ech[:n]))

    def solve(self, rhs: Sequence) -> list[FieldElement] | None:
        """One solution of ``self @ v = rhs``, or None when inconsistent."""
        n, m = self.shape
        K = self.field
        aug = Matrix(K, [list(r) + [rhs[i]] for i, r in enumerate(self.rows)])
        ech, pivots = aug._echelon()
        if m in pivots:
            return None
        sol = [K.zero_element() for _ in range(m)]
        for i, c in enumerate(pivots):
            sol[c] = ech[i][m]
        return sol

    def apply(self, vec: Sequence) -> list[FieldElement]:
        return [sum((x * v for x, v in zip(r, vec)), self.field.zero_element()) for r in self.rows]

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __str__(self):
        cells = self.to_strings()
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def __repr__(self):
        return f"Matrix({self.field.name}, {self.to_strings()})"


def rank_of_vectors(field: Field, vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return Matrix(field, vectors).rank()
