"""Exact arithmetic in linear towers of fields.

A tower starts at QQ or GF(p) and grows one level at a time, either by a root
of a monic polynomial (:class:`SimpleExtension`) or by a transcendental
(:class:`RationalFunctionField`).  A field object is its own descriptor.
Elements wrap a canonical *raw* value owned by their field, so equality is a
plain comparison of raw values:

* QQ: ``Fraction``
* GF(p): ``int`` in ``range(p)``
* simple extension of degree n: ``tuple`` of n raw base values
* rational function field: ``(num, den)``, trimmed coefficient tuples with
  ``den`` monic and coprime to ``num``
"""
from __future__ import annotations

import copy
import random
from fractions import Fraction
from itertools import product
from math import gcd, isqrt
from typing import Iterator, Sequence


class FieldError(ValueError):
    """Malformed field construction or incompatible operands."""


class _Undecided:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDECIDED"

    def __bool__(self):
        raise TypeError("UNDECIDED has no truth value")


#: Third value returned by :func:`has_cube_root` when the question is not
#: decidable with the implemented methods.
UNDECIDED = _Undecided()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense univariate polynomials over a field level, as tuples of raw values
# (lowest degree first, no trailing zeros)
# ---------------------------------------------------------------------------

def ptrim(K: Field, f: Sequence) -> tuple:
    f = list(f)
    z = K.zero
    while f and f[-1] == z:
        f.pop()
    return tuple(f)


def padd(K: Field, f: tuple, g: tuple) -> tuple:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = K.add(out[i], c)
    return ptrim(K, out)


def psub(K: Field, f: tuple, g: tuple) -> tuple:
    out = list(f) + [K.zero] * (len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = K.sub(out[i], c)
    return ptrim(K, out)


def pscale(K: Field, c, f: tuple) -> tuple:
    if c == K.zero:
        return ()
    return tuple(K.mul(c, a) for a in f)


def pmul(K: Field, f: tuple, g: tuple) -> tuple:
    if not f or not g:
        return ()
    z = K.zero
    out = [z] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == z:
            continue
        for j, b in enumerate(g):
            if b != z:
                out[i + j] = K.add(out[i + j], K.mul(a, b))
    return ptrim(K, out)


def pdivmod(K: Field, f: tuple, g: tuple) -> tuple[tuple, tuple]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    inv_lead = K.inv(g[-1])
    q = [K.zero] * max(len(f) - dg, 0)
    for k in range(len(f) - 1 - dg, -1, -1):
        c = r[k + dg]
        if c == K.zero:
            continue
        c = K.mul(c, inv_lead)
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] = K.sub(r[k + i], K.mul(c, b))
    return ptrim(K, q), ptrim(K, r[:dg])


def pmonic(K: Field, f: tuple) -> tuple:
    if not f:
        return f
    inv = K.inv(f[-1])
    return tuple(K.mul(inv, a) for a in f[:-1]) + (K.one,)


def pgcd(K: Field, f: tuple, g: tuple) -> tuple:
    while g:
        f, g = g, pdivmod(K, f, g)[1]
    return pmonic(K, f)


def pxgcd(K: Field, f: tuple, g: tuple) -> tuple[tuple, tuple, tuple]:
    """Return ``(h, s, t)`` with ``s*f + t*g = h`` and ``h`` the monic gcd."""
    r0, r1 = f, g
    s0, s1 = (K.one,), ()
    t0, t1 = (), (K.one,)
    while r1:
        q, r = pdivmod(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(K, s0, pmul(K, q, s1))
        t0, t1 = t1, psub(K, t0, pmul(K, q, t1))
    if not r0:
        return (), s0, t0
    inv = K.inv(r0[-1])
    return pscale(K, inv, r0), pscale(K, inv, s0), pscale(K, inv, t0)


def peval(K: Field, f: tuple, x):
    acc = K.zero
    for c in reversed(f):
        acc = K.add(K.mul(acc, x), c)
    return acc


def pderiv(K: Field, f: tuple) -> tuple:
    return ptrim(K, [K.mul(K.from_int(i), c) for i, c in enumerate(f)][1:])


def ppowmod(K: Field, f: tuple, e: int, m: tuple) -> tuple:
    result = (K.one,)
    base = pdivmod(K, f, m)[1]
    while e:
        if e & 1:
            result = pdivmod(K, pmul(K, result, base), m)[1]
        e >>= 1
        if e:
            base = pdivmod(K, pmul(K, base, base), m)[1]
    return result


# ---------------------------------------------------------------------------
# field levels
# ---------------------------------------------------------------------------

class Field:
    """One level of a tower.  Subclasses implement the raw operations."""

    characteristic: int
    base: Field | None = None
    name: str
    zero: object
    one: object
    _rho = None

    # raw arithmetic -------------------------------------------------------
    def add(self, a, b): raise NotImplementedError
    def sub(self, a, b): raise NotImplementedError
    def neg(self, a): raise NotImplementedError
    def mul(self, a, b): raise NotImplementedError
    def inv(self, a): raise NotImplementedError
    def from_int(self, n: int): raise NotImplementedError
    def fmt(self, a) -> str: raise NotImplementedError
    def random_raw(self, rng: random.Random): raise NotImplementedError

    def from_fraction(self, q: Fraction):
        num = self.from_int(q.numerator)
        if q.denominator == 1:
            return num
        return self.mul(num, self.inv(self.from_int(q.denominator)))

    def _embed(self, base_raw):
        raise FieldError(f"{self.name} has no base field")

    def _descend(self, raw):
        """Return the base raw value if ``raw`` lies in the base, else None."""
        return None

    # descriptor -----------------------------------------------------------
    def order(self) -> int | None:
        return None

    def raw_elements(self) -> Iterator:
        raise FieldError(f"{self.name} is infinite")

    def key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other):
        return self is other or (isinstance(other, Field) and self.key() == other.key())

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"<field {self.name}>"

    def __str__(self):
        return self.name

    def tower(self) -> list[Field]:
        out, K = [], self
        while K is not None:
            out.append(K)
            K = K.base
        return out[::-1]

    def prime_field(self) -> Field:
        return self.tower()[0]

    def contains_field(self, other: Field) -> bool:
        K = self
        while K is not None:
            if K is other or K == other:
                return True
            K = K.base
        return False

    def generator_names(self) -> dict[str, FieldElement]:
        """Names usable in expressions, each lifted to this field."""
        names = {}
        for K in self.tower():
            g = getattr(K, "gen_name", None)
            if g is not None:
                names[g] = self.lift(K.gen)
            if K._rho is not None:
                names.setdefault("rho", self.lift(FieldElement(K, K._rho)))
        return names

    @property
    def rho(self) -> FieldElement | None:
        K = self
        while K is not None:
            if K._rho is not None:
                return self.lift(FieldElement(K, K._rho))
            K = K.base
        return None

    def with_rho(self, raw) -> Field:
        out = copy.copy(self)
        out._rho = raw
        return out

    def absolute_degree(self) -> int | None:
        """Degree over the prime field, None for transcendental towers."""
        deg = 1
        for K in self.tower()[1:]:
            if not isinstance(K, SimpleExtension):
                return None
            deg *= K.degree
        return deg

    # element construction -------------------------------------------------
    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            return self.lift(value)
        if isinstance(value, bool):
            raise TypeError("bool is not a field value")
        if isinstance(value, int):
            return FieldElement(self, self.from_int(value))
        if isinstance(value, Fraction):
            return FieldElement(self, self.from_fraction(value))
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def lift(self, x: FieldElement) -> FieldElement:
        if x.field is self:
            return x
        if x.field == self:
            return FieldElement(self, x.raw)
        if self.base is None:
            raise FieldError(f"{x.field.name} is not a subfield of {self.name}")
        inner = self.base.lift(x)
        return FieldElement(self, self._embed(inner.raw))

    def zero_element(self) -> FieldElement:
        return FieldElement(self, self.zero)

    def one_element(self) -> FieldElement:
        return FieldElement(self, self.one)

    def elements(self) -> Iterator[FieldElement]:
        for r in self.raw_elements():
            yield FieldElement(self, r)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> FieldElement:
        while True:
            r = self.random_raw(rng)
            if not nonzero or r != self.zero:
                return FieldElement(self, r)


class RationalField(Field):
    characteristic = 0
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b): return a + b
    def sub(self, a, b): return a - b
    def neg(self, a): return -a
    def mul(self, a, b): return a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in QQ")
        return 1 / a

    def from_int(self, n): return Fraction(n)
    def from_fraction(self, q): return Fraction(q)
    def fmt(self, a): return str(a)
    def key(self): return ("QQ",)

    def random_raw(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = self.characteristic = p
        self.name = f"GF({p})"
        self.zero, self.one = 0, 1 % p

    def add(self, a, b): return (a + b) % self.p
    def sub(self, a, b): return (a - b) % self.p
    def neg(self, a): return -a % self.p
    def mul(self, a, b): return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return pow(a, -1, self.p)

    def from_int(self, n): return n % self.p
    def fmt(self, a): return str(a)
    def key(self): return ("GF", self.p)
    def order(self): return self.p
    def raw_elements(self): return iter(range(self.p))
    def random_raw(self, rng): return rng.randrange(self.p)


class SimpleExtension(Field):
    """``base[T]/(minpoly)`` for a monic polynomial of degree at least 2.

    Irreducibility is verified when the base is finite; otherwise it is a
    caller assertion kept in :attr:`irreducibility`.
    """

    def __init__(self, base: Field, minpoly: Sequence, gen_name: str, *, check: bool = True):
        coeffs = tuple(base(c).raw if not isinstance(c, FieldElement) else base.lift(c).raw
                       for c in minpoly)
        coeffs = ptrim(base, coeffs)
        if len(coeffs) < 3:
            raise FieldError("extension polynomial must have degree >= 2")
        if coeffs[-1] != base.one:
            raise FieldError("extension polynomial must be monic")
        self.base = base
        self.minpoly = coeffs
        self.degree = len(coeffs) - 1
        self.gen_name = gen_name
        self.characteristic = base.characteristic
        self.name = f"{base.name}({gen_name})"
        self.zero = (base.zero,) * self.degree
        self.one = (base.one,) + (base.zero,) * (self.degree - 1)
        self._key = ("ext", base.key(), coeffs)
        if base.order() is not None:
            if check and not is_irreducible(base, coeffs):
                raise FieldError(f"{poly_str(base, coeffs, 'T')} is reducible over {base.name}")
            self.irreducibility = "verified"
        elif isinstance(base, RationalField) and self.degree <= 3:
            if check and rational_roots(coeffs):
                raise FieldError(f"{poly_str(base, coeffs, 'T')} has a rational root")
            self.irreducibility = "verified"
        else:
            self.irreducibility = "asserted"

    @property
    def gen(self) -> FieldElement:
        B = self.base
        return FieldElement(self, (B.zero, B.one) + (B.zero,) * (self.degree - 2))

    def key(self):
        return self._key

    def order(self):
        q = self.base.order()
        return None if q is None else q ** self.degree

    def raw_elements(self):
        return product(list(self.base.raw_elements()), repeat=self.degree)

    def random_raw(self, rng):
        return tuple(self.base.random_raw(rng) for _ in range(self.degree))

    def _embed(self, b):
        return (b,) + (self.base.zero,) * (self.degree - 1)

    def _descend(self, raw):
        z = self.base.zero
        if all(c == z for c in raw[1:]):
            return raw[0]
        return None

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        B, n, z = self.base, self.degree, self.base.zero
        prod = [z] * (2 * n - 1)
        for i, x in enumerate(a):
            if x == z:
                continue
            for j, y in enumerate(b):
                if y != z:
                    prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        m = self.minpoly
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c == z:
                continue
            for i in range(n):
                mi = m[i]
                if mi == z:
                    continue
                prod[k - n + i] = B.sub(prod[k - n + i], c if mi == B.one else B.mul(c, mi))
        return tuple(prod[:n])

    def inv(self, a):
        B = self.base
        f = ptrim(B, a)
        if not f:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        h, s, _ = pxgcd(B, f, self.minpoly)
        if len(h) != 1:
            raise FieldError(f"{self.name} is not a field: the minimal polynomial is reducible")
        return tuple(s) + (B.zero,) * (self.degree - len(s))

    def from_int(self, n):
        return self._embed(self.base.from_int(n))

    def from_fraction(self, q):
        return self._embed(self.base.from_fraction(q))

    def fmt(self, a):
        B = self.base
        terms = []
        for i in range(self.degree - 1, -1, -1):
            c = a[i]
            if c == B.zero:
                continue
            cs = B.fmt(c)
            if i == 0:
                terms.append(cs)
                continue
            mon = self.gen_name if i == 1 else f"{self.gen_name}^{i}"
            if c == B.one:
                terms.append(mon)
            elif c == B.neg(B.one):
                terms.append("-" + mon)
            elif _is_atomic(cs):
                terms.append(f"{cs}*{mon}")
            else:
                terms.append(f"({cs})*{mon}")
        return _join_terms(terms)


class RationalFunctionField(Field):
    """``base(t)``: quotients of univariate polynomials over ``base``."""

    def __init__(self, base: Field, gen_name: str):
        self.base = base
        self.gen_name = gen_name
        self.characteristic = base.characteristic
        self.name = f"{base.name}({gen_name})"
        self._one_poly = (base.one,)
        self.zero = ((), self._one_poly)
        self.one = (self._one_poly, self._one_poly)

    @property
    def gen(self) -> FieldElement:
        B = self.base
        return FieldElement(self, ((B.zero, B.one), self._one_poly))

    def key(self):
        return ("ratfunc", self.base.key())

    def _norm(self, num, den):
        B = self.base
        if not num:
            return self.zero
        if len(den) > 1:
            g = pgcd(B, num, den)
            if len(g) > 1:
                num = pdivmod(B, num, g)[0]
                den = pdivmod(B, den, g)[0]
        lead = den[-1]
        if lead != B.one:
            inv = B.inv(lead)
            num = pscale(B, inv, num)
            den = pscale(B, inv, den)
        return (num, den)

    def _embed(self, b):
        return self._norm(ptrim(self.base, (b,)), self._one_poly)

    def _descend(self, raw):
        num, den = raw
        if den == self._one_poly and len(num) <= 1:
            return num[0] if num else self.base.zero
        return None

    def add(self, a, b):
        B, one = self.base, self._one_poly
        if a[1] == one and b[1] == one:
            return (padd(B, a[0], b[0]), one)
        if a[1] == b[1]:
            return self._norm(padd(B, a[0], b[0]), a[1])
        return self._norm(padd(B, pmul(B, a[0], b[1]), pmul(B, b[0], a[1])),
                          pmul(B, a[1], b[1]))

    def neg(self, a):
        return (tuple(self.base.neg(c) for c in a[0]), a[1])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        B, one = self.base, self._one_poly
        if a[1] == one and b[1] == one:
            return (pmul(B, a[0], b[0]), one)
        return self._norm(pmul(B, a[0], b[0]), pmul(B, a[1], b[1]))

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return self._norm(a[1], a[0])

    def from_int(self, n):
        return self._embed(self.base.from_int(n))

    def from_fraction(self, q):
        return self._embed(self.base.from_fraction(q))

    def fmt(self, a):
        num = poly_str(self.base, a[0], self.gen_name)
        if a[1] == self._one_poly:
            return num
        return f"({num})/({poly_str(self.base, a[1], self.gen_name)})"

    def random_raw(self, rng):
        B = self.base
        num = ptrim(B, [B.random_raw(rng) for _ in range(rng.randint(0, 3))])
        den = ptrim(B, [B.random_raw(rng) for _ in range(rng.randint(0, 1))] + [B.one])
        return self._norm(num, den)


def _is_atomic(s: str) -> bool:
    body = s[1:] if s.startswith("-") else s
    return not any(ch in body for ch in "+-") and " " not in body


def _join_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def poly_str(K: Field, f: Sequence, var: str) -> str:
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == K.zero:
            continue
        cs = K.fmt(c)
        if i == 0:
            terms.append(cs)
            continue
        mon = var if i == 1 else f"{var}^{i}"
        if c == K.one:
            terms.append(mon)
        elif c == K.neg(K.one):
            terms.append("-" + mon)
        else:
            terms.append(f"{cs}*{mon}" if _is_atomic(cs) else f"({cs})*{mon}")
    return _join_terms(terms)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class FieldElement:
    """Immutable element of a :class:`Field`."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw):
        self.field = field
        self.raw = raw

    def _other(self, other) -> tuple[Field, object, object]:
        K = self.field
        if isinstance(other, FieldElement):
            L = other.field
            if L is K:
                return K, self.raw, other.raw
            if K.contains_field(L):
                return K, self.raw, K.lift(other).raw
            if L.contains_field(K):
                return L, L.lift(self).raw, other.raw
            raise FieldError(f"incompatible fields {K.name} and {L.name}")
        if isinstance(other, int) and not isinstance(other, bool):
            return K, self.raw, K.from_int(other)
        if isinstance(other, Fraction):
            return K, self.raw, K.from_fraction(other)
        return None, None, None

    def __add__(self, other):
        K, a, b = self._other(other)
        if K is None:
            return NotImplemented
        return FieldElement(K, K.add(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        K, a, b = self._other(other)
        if K is None:
            return NotImplemented
        return FieldElement(K, K.sub(a, b))

    def __rsub__(self, other):
        K, a, b = self._other(other)
        if K is None:
            return NotImplemented
        return FieldElement(K, K.sub(b, a))

    def __mul__(self, other):
        K, a, b = self._other(other)
        if K is None:
            return NotImplemented
        return FieldElement(K, K.mul(a, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        K, a, b = self._other(other)
        if K is None:
            return NotImplemented
        return FieldElement(K, K.mul(a, K.inv(b)))

    def __rtruediv__(self, other):
        K, a, b = self._other(other)
        if K is None:
            return NotImplemented
        return FieldElement(K, K.mul(b, K.inv(a)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.raw))

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        K = self.field
        base = self.raw
        if n < 0:
            base, n = K.inv(base), -n
        result = K.one
        while n:
            if n & 1:
                result = K.mul(result, base)
            n >>= 1
            if n:
                base = K.mul(base, base)
        return FieldElement(K, result)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.raw))

    def is_zero(self) -> bool:
        return self.raw == self.field.zero

    def is_one(self) -> bool:
        return self.raw == self.field.one

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement) and other.field is self.field:
            return self.raw == other.raw
        try:
            K, a, b = self._other(other)
        except FieldError:
            return False
        if K is None:
            return NotImplemented
        return a == b

    def __hash__(self):
        K, r = self.field, self.raw
        while K.base is not None:
            d = K._descend(r)
            if d is None:
                break
            K, r = K.base, d
        return hash(r)

    def descend(self) -> FieldElement:
        """The same element expressed in the lowest tower level containing it."""
        K, r = self.field, self.raw
        while K.base is not None:
            d = K._descend(r)
            if d is None:
                break
            K, r = K.base, d
        return FieldElement(K, r)

    def coordinates(self) -> list[FieldElement]:
        """Coordinates over the base level (extension levels only)."""
        K = self.field
        if not isinstance(K, SimpleExtension):
            raise FieldError(f"{K.name} is not a simple extension")
        return [FieldElement(K.base, c) for c in self.raw]

    def to_fraction(self) -> Fraction:
        d = self.descend()
        if not isinstance(d.field, RationalField):
            raise FieldError(f"{self} is not rational")
        return d.raw

    def __str__(self):
        return self.field.fmt(self.raw)

    def __repr__(self):
        return f"{self.field.name}({self.field.fmt(self.raw)})"


# ---------------------------------------------------------------------------
# finite-field algorithms
# ---------------------------------------------------------------------------

def is_irreducible(K: Field, f: Sequence) -> bool:
    """Rabin's irreducibility test over a finite level ``K``."""
    q = K.order()
    if q is None:
        raise FieldError("irreducibility is only decided over finite fields")
    f = pmonic(K, ptrim(K, f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    T = (K.zero, K.one)

    def frob(h: tuple, times: int) -> tuple:
        for _ in range(times):
            h = ppowmod(K, h, q, f)
        return h

    if psub(K, frob(T, n), T):
        return False
    for r in _prime_factors(n):
        h = psub(K, frob(T, n // r), T)
        if len(pgcd(K, f, h)) > 1:
            return False
    return True


def poly_roots(K: Field, f: Sequence) -> list[FieldElement]:
    """All roots in the finite field ``K`` of a nonzero polynomial, sorted by raw value."""
    q = K.order()
    if q is None:
        raise FieldError("root finding is only implemented over finite fields")
    f = pmonic(K, ptrim(K, f))
    if not f:
        raise ValueError("zero polynomial")
    T = (K.zero, K.one)
    g = pgcd(K, f, psub(K, ppowmod(K, T, q, f), T)) if len(f) > 2 else f
    rng = random.Random(0x5EED)
    out: list = []

    def split(h: tuple) -> None:
        if len(h) == 1:
            return
        if len(h) == 2:
            out.append(K.neg(h[0]))
            return
        while True:
            d = (K.random_raw(rng), K.one)
            if q % 2:
                t = psub(K, ppowmod(K, d, (q - 1) // 2, h), (K.one,))
            else:
                # absolute trace map from GF(q) to GF(2)
                t, acc = (), pdivmod(K, d, h)[1]
                k = q.bit_length() - 1
                for _ in range(k):
                    t = padd(K, t, acc)
                    acc = pdivmod(K, pmul(K, acc, acc), h)[1]
            a = pgcd(K, h, t)
            if 1 < len(a) < len(h):
                split(a)
                split(pdivmod(K, h, a)[0])
                return

    split(g)
    return [FieldElement(K, r) for r in sorted(set(out), key=_raw_sort_key)]


def _raw_sort_key(r):
    if isinstance(r, tuple):
        return tuple(_raw_sort_key(c) for c in r)
    return r


def find_irreducible(K: Field, degree: int, seed: int = 0) -> tuple:
    """A monic irreducible polynomial of the given degree over a finite ``K``."""
    rng = random.Random(seed)
    while True:
        f = tuple(K.random_raw(rng) for _ in range(degree)) + (K.one,)
        if is_irreducible(K, f):
            return f


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def extend(K: Field, minpoly: Sequence, gen_name: str | None = None, *, check: bool = True) -> SimpleExtension:
    name = gen_name or f"a{len(K.tower())}"
    return SimpleExtension(K, minpoly, name, check=check)


def adjoin_rho(K: Field) -> Field:
    """Ensure a primitive cube root of unity; extend by T^2+T+1 only if needed."""
    if K.rho is not None:
        return K
    if K.characteristic == 3:
        raise FieldError("characteristic 3 has no primitive cube root of unity")
    cyclotomic = (K.one, K.one, K.one)
    if K.order() is not None:
        roots = poly_roots(K, cyclotomic)
        if roots:
            return K.with_rho(roots[0].raw)
    L = SimpleExtension(K, [1, 1, 1], "rho", check=K.order() is not None)
    L._rho = L.gen.raw
    return L


def make_field(prime: int | None = None, extensions: Sequence = (), adjoin_rho_: bool = False) -> Field:
    """Build a tower from QQ (``prime=None``) or GF(prime).

    ``extensions`` is a sequence of ``(coefficients, name)`` pairs, applied in
    order; coefficients are lowest degree first and may be any values
    coercible into the level below.
    """
    K: Field = QQ if prime is None else GF(prime)
    for coeffs, name in extensions:
        K = extend(K, [K(c) if not isinstance(c, FieldElement) else K.lift(c) for c in coeffs], name)
    if adjoin_rho_:
        K = adjoin_rho(K)
    return K


# ---------------------------------------------------------------------------
# norms and cube roots
# ---------------------------------------------------------------------------

def _det_raw(K: Field, rows: list[list]) -> object:
    m = [list(r) for r in rows]
    n = len(m)
    det = K.one
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != K.zero), None)
        if piv is None:
            return K.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = K.neg(det)
        det = K.mul(det, m[c][c])
        inv = K.inv(m[c][c])
        for r in range(c + 1, n):
            if m[r][c] == K.zero:
                continue
            f = K.mul(m[r][c], inv)
            m[r] = [K.sub(a, K.mul(f, b)) for a, b in zip(m[r], m[c])]
    return det


def absolute_norm(a: FieldElement) -> FieldElement:
    """Norm of ``a`` down to the prime field of a finite-degree tower."""
    K, raw = a.field, a.raw
    while K.base is not None:
        if not isinstance(K, SimpleExtension):
            raise FieldError("norm is undefined across a transcendental level")
        cols = []
        basis_vec = K.one
        x = K.gen.raw
        for _ in range(K.degree):
            cols.append(list(K.mul(raw, basis_vec)))
            basis_vec = K.mul(basis_vec, x)
        rows = [list(r) for r in zip(*cols)]
        raw = _det_raw(K.base, rows)
        K = K.base
    return FieldElement(K, raw)


def _integer_cube_root(n: int) -> int | None:
    if n < 0:
        r = _integer_cube_root(-n)
        return None if r is None else -r
    r = round(n ** (1 / 3)) if n < 2 ** 1000 else int(n ** (1 / 3))
    lo, hi = max(r - 2, 0), r + 2
    while hi ** 3 < n:
        lo, hi = hi, hi * 2
    while lo <= hi:
        mid = (lo + hi) // 2
        c = mid ** 3
        if c == n:
            return mid
        if c < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def rational_roots(coeffs: Sequence) -> list[Fraction]:
    """Rational roots of a polynomial with rational coefficients (lowest degree first)."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    roots = []
    if coeffs and coeffs[0] == 0:
        roots.append(Fraction(0))
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
    if len(coeffs) < 2:
        return roots
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]

    def divisors(n: int) -> list[int]:
        n = abs(n)
        small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
        return small + [n // d for d in small if d * d != n]

    for p in divisors(ints[0]):
        for q in divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and sum(c * cand ** i for i, c in enumerate(coeffs)) == 0:
                    roots.append(cand)
    return roots


def rational_cube_root(q: Fraction) -> Fraction | None:
    a = _integer_cube_root(q.numerator)
    b = _integer_cube_root(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def has_cube_root(a: FieldElement):
    """Return a cube root of ``a`` in its field, ``None``, or :data:`UNDECIDED`.

    Finite fields are decided exactly.  Towers of finite degree over QQ are
    decided only partially: a root is found when ``a`` is a rational cube,
    and ``None`` is returned when the absolute norm of ``a`` is not a
    rational cube (a cube has a cube norm) or when ``a`` is a rational
    non-cube and the tower degree is prime to 3.  Everything else is
    :data:`UNDECIDED`.
    """
    K = a.field
    if a.is_zero():
        return a
    q = K.order()
    if q is not None:
        if K.characteristic == 3:
            return a ** (q // 3)
        if (q - 1) % 3:
            return a ** pow(3, -1, q - 1)
        if not (a ** ((q - 1) // 3)).is_one():
            return None
        cubic = (K.neg(a.raw), K.zero, K.zero, K.one)
        return poly_roots(K, cubic)[0]
    deg = K.absolute_degree()
    if K.characteristic != 0 or deg is None:
        return UNDECIDED
    d = a.descend()
    if isinstance(d.field, RationalField):
        root = rational_cube_root(d.raw)
        if root is not None:
            return K(root)
        if deg % 3:
            return None
    if rational_cube_root(absolute_norm(a).raw) is None:
        return None
    return UNDECIDED
