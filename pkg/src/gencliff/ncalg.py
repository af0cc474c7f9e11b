"""Free associative algebras, star products, eigenvector decompositions and
a word-rewriting engine for normal forms modulo a presentation.

Words are tuples of generator indices.  The monomial order is weighted
degree first, then lexicographic by generator precedence; every rewrite rule
must strictly decrease it, which makes reduction terminate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import PreconditionError, VerificationError
from .fieldtower import Field, FieldElement, _is_atomic, _join_terms
from .matrices import Matrix

Word = tuple


class NCRing:
    """The free algebra ``field<names>`` together with a monomial order.

    ``weights`` gives each generator a positive degree; ``precedence`` lists
    the generators from smallest to largest for the lexicographic tie-break
    (default: the order of ``names``).
    """

    def __init__(self, field: Field, names: Sequence[str], weights: Sequence[int] | None = None,
                 precedence: Sequence[str] | None = None):
        self.field = field
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        self.weights = tuple(weights) if weights is not None else (1,) * len(self.names)
        if len(self.weights) != len(self.names) or min(self.weights) <= 0:
            raise ValueError("weights must be positive, one per generator")
        prec = tuple(precedence) if precedence is not None else self.names
        if sorted(prec) != sorted(self.names):
            raise ValueError("precedence must list every generator once")
        self._rank = tuple(prec.index(n) for n in self.names)

    def __repr__(self):
        return f"NCRing({self.field.name}, {self.names})"

    def key(self, word: Word) -> tuple:
        return (sum(self.weights[g] for g in word), tuple(self._rank[g] for g in word))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def word(self, *names: str) -> Word:
        return tuple(self.index(n) for n in names)

    def gen(self, name: str) -> NCPoly:
        return NCPoly(self, {(self.index(name),): self.field.one_element()})

    def gens(self) -> list[NCPoly]:
        return [self.gen(n) for n in self.names]

    def one(self) -> NCPoly:
        return NCPoly(self, {(): self.field.one_element()})

    def zero(self) -> NCPoly:
        return NCPoly(self, {})

    def scalar(self, c) -> NCPoly:
        return NCPoly(self, {(): self.field(c)})

    def monomial(self, word: Word, c=1) -> NCPoly:
        return NCPoly(self, {tuple(word): self.field(c)})

    def word_str(self, word: Word) -> str:
        if not word:
            return "1"
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            n = self.names[word[i]]
            parts.append(n if j - i == 1 else f"{n}^{j - i}")
            i = j
        return "*".join(parts)


def _acc(out: dict, word: Word, c: FieldElement) -> None:
    s = out.get(word)
    s = c if s is None else s + c
    if s.is_zero():
        out.pop(word, None)
    else:
        out[word] = s


class NCPoly:
    """Noncommutative polynomial: a map from words to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: NCRing, terms: Mapping[Word, FieldElement]):
        self.ring = ring
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring, p.terms = ring, terms
        return p

    def _coerce(self, other) -> NCPoly | None:
        if isinstance(other, NCPoly):
            if other.ring is not self.ring and other.ring.names != self.ring.names:
                raise ValueError("polynomials over different free algebras")
            return other
        if isinstance(other, (int, Fraction, FieldElement)) and not isinstance(other, bool):
            return self.ring.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in o.terms.items():
            _acc(out, w, c)
        return NCPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._raw(self.ring, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    _acc(out, w1 + w2, c1 * c2)
            return NCPoly._raw(self.ring, out)
        if isinstance(other, (int, Fraction, FieldElement)) and not isinstance(other, bool):
            c = self.ring.field(other)
            if c.is_zero():
                return self.ring.zero()
            return NCPoly._raw(self.ring, {w: c * v for w, v in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power in a free algebra")
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def constant(self) -> FieldElement:
        return self.terms.get((), self.ring.field.zero_element())

    def is_constant(self) -> bool:
        return all(not w for w in self.terms)

    def words(self) -> list[Word]:
        return sorted(self.terms, key=self.ring.key, reverse=True)

    def leading_word(self) -> Word:
        return max(self.terms, key=self.ring.key)

    def evaluate(self, values: Mapping[str, object] | Sequence, one):
        """Image under the algebra map sending each generator to ``values``.

        ``values`` may be any objects supporting ``+``, ``*`` and
        multiplication by field elements (matrices, symbol-algebra
        elements, polynomials of another ring ...); ``one`` is the target
        identity.
        """
        if isinstance(values, Mapping):
            vals = [values[n] for n in self.ring.names]
        else:
            vals = list(values)
        cache: dict = {(): one}

        def prod(word):
            hit = cache.get(word)
            if hit is None:
                hit = prod(word[:-1]) * vals[word[-1]]
                cache[word] = hit
            return hit

        total = None
        for w in sorted(self.terms):
            term = self.terms[w] * prod(w)
            total = term if total is None else total + term
        return total if total is not None else one * 0

    def __str__(self):
        terms = []
        for w in self.words():
            c = self.terms[w]
            cs = str(c)
            mon = self.ring.word_str(w)
            if not w:
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
        return f"NCPoly({self})"


# ---------------------------------------------------------------------------
# star products and commutators
# ---------------------------------------------------------------------------

def star_product(factors: Sequence[tuple[object, int]], ring: NCRing | None = None):
    """Sum of all distinct products in which factor i occurs ``m_i`` times.

    Factors may be generator names (with ``ring``) or any multiplicable
    elements such as :class:`NCPoly` or :class:`Matrix`.
    """
    if not factors:
        raise ValueError("star product of no factors")
    elems, counts = [], []
    for f, m in factors:
        if m < 1:
            raise ValueError("multiplicities must be positive")
        if isinstance(f, str):
            if ring is None:
                raise ValueError("generator names need a ring")
            f = ring.gen(f)
        elems.append(f)
        counts.append(m)
    # star(m) = sum_i e_i * star(m - unit_i), memoised over multiplicity vectors
    memo: dict[tuple, object] = {}

    def star(m: tuple):
        if m in memo:
            return memo[m]
        total = None
        for i, k in enumerate(m):
            if not k:
                continue
            rest = m[:i] + (k - 1,) + m[i + 1:]
            term = elems[i] if not any(rest) else elems[i] * star(rest)
            total = term if total is None else total + term
        memo[m] = total
        return total

    return star(tuple(counts))


# ---------------------------------------------------------------------------
# rewriting
# ---------------------------------------------------------------------------

class RewriteSystem:
    """Rules ``word -> polynomial`` over an :class:`NCRing`.

    Each rule must strictly decrease the ring's monomial order.  Normal forms
    are memoised per word; the system itself never changes after
    construction.
    """

    def __init__(self, ring: NCRing, rules: Iterable[tuple[Word, NCPoly]], name: str = ""):
        self.ring = ring
        self.name = name
        checked = []
        for lhs, rhs in rules:
            lhs = tuple(lhs)
            if not lhs:
                raise ValueError("empty left-hand side")
            if isinstance(rhs, NCPoly):
                if rhs.ring.names != ring.names:
                    raise ValueError("rule over a different ring")
            else:
                rhs = ring.scalar(rhs)
            k = ring.key(lhs)
            for w in rhs.terms:
                if not ring.key(w) < k:
                    raise ValueError(
                        f"rule {ring.word_str(lhs)} -> {rhs} does not decrease the monomial order "
                        f"(offending term {ring.word_str(w)})")
            checked.append((lhs, rhs))
        self.rules = tuple(checked)
        self._lookup = {}
        for lhs, rhs in checked:
            if lhs in self._lookup:
                raise ValueError(f"duplicate rule for {ring.word_str(lhs)}")
            self._lookup[lhs] = rhs.terms
        self._lengths = sorted({len(l) for l, _ in checked})
        self._cache: dict[Word, dict] = {}
        self._one = ring.field.one_element()

    def __repr__(self):
        return f"RewriteSystem({self.name or len(self.rules)} rules)"

    def rule_strings(self) -> list[str]:
        return [f"{self.ring.word_str(l)} -> {r}" for l, r in self.rules]

    def without(self, *lhs_names: Sequence[str]) -> RewriteSystem:
        """Copy with the rules for the given left-hand sides removed."""
        drop = {self.ring.word(*names) for names in lhs_names}
        return RewriteSystem(self.ring, [(l, r) for l, r in self.rules if l not in drop],
                             name=f"{self.name} minus {len(drop)}")

    def is_normal(self, word: Word) -> bool:
        for L in self._lengths:
            for i in range(len(word) - L + 1):
                if word[i:i + L] in self._lookup:
                    return False
        return True

    def _append(self, m: Word, g: int) -> dict:
        w = m + (g,)
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        for L in self._lengths:
            if L > len(w):
                break
            rhs = self._lookup.get(w[-L:])
            if rhs is not None:
                head = w[:-L]
                res: dict = {}
                for rw, rc in rhs.items():
                    for w3, c3 in self._nf_word(head + rw).items():
                        _acc(res, w3, rc * c3)
                self._cache[w] = res
                return res
        res = {w: self._one}
        self._cache[w] = res
        return res

    def _nf_word(self, word: Word) -> dict:
        hit = self._cache.get(word)
        if hit is not None:
            return hit
        poly = {(): self._one}
        for g in word:
            new: dict = {}
            for m, c in poly.items():
                for w2, c2 in self._append(m, g).items():
                    _acc(new, w2, c * c2)
            poly = new
        self._cache[word] = poly
        return poly

    def normal_form(self, p: NCPoly) -> NCPoly:
        out: dict = {}
        for w, c in p.terms.items():
            for w2, c2 in self._nf_word(w).items():
                _acc(out, w2, c * c2)
        return NCPoly._raw(self.ring, out)

    def reduces_to_zero(self, p: NCPoly) -> bool:
        return self.normal_form(p).is_zero()


def normal_form(p: NCPoly, rs: RewriteSystem) -> NCPoly:
    return rs.normal_form(p)


@dataclass(frozen=True)
class Ambiguity:
    word: Word
    rules: tuple[Word, Word]
    left: NCPoly
    right: NCPoly

    def describe(self, ring: NCRing) -> str:
        return (f"{ring.word_str(self.word)}: {self.left} != {self.right} "
                f"(rules {ring.word_str(self.rules[0])}, {ring.word_str(self.rules[1])})")


def overlap_check(rs: RewriteSystem, max_len: int = 8) -> list[Ambiguity]:
    """Resolve every overlap and inclusion ambiguity of length <= max_len.

    Returns the ambiguities whose two reductions have different normal forms.
    An empty result means the system is confluent (diamond lemma) as far as
    ambiguities of that length are concerned.
    """
    ring = rs.ring
    bad = []

    def poly(terms, prefix=(), suffix=()):
        return NCPoly._raw(ring, {prefix + w + suffix: c for w, c in terms.items()})

    def compare(word, r1, r2, red1, red2):
        n1, n2 = rs.normal_form(red1), rs.normal_form(red2)
        if n1 != n2:
            bad.append(Ambiguity(word, (r1, r2), n1, n2))

    for l1, rhs1 in rs.rules:
        for l2, rhs2 in rs.rules:
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    word = l1 + l2[k:]
                    if len(word) <= max_len:
                        compare(word, l1, l2, poly(rhs1.terms, suffix=l2[k:]),
                                poly(rhs2.terms, prefix=l1[:-k]))
            if l1 != l2 and len(l2) < len(l1) and len(l1) <= max_len:
                for pos in range(len(l1) - len(l2) + 1):
                    if l1[pos:pos + len(l2)] == l2:
                        compare(l1, l1, l2, rhs1,
                                poly(rhs2.terms, prefix=l1[:pos], suffix=l1[pos + len(l2):]))
    return bad


# ---------------------------------------------------------------------------
# algebra contexts
# ---------------------------------------------------------------------------

class AlgebraContext:
    """Arithmetic of some associative algebra over ``field``.

    The default implementation delegates to the element operators; the
    rewriting quotient overrides multiplication to normalise.
    """

    field: Field

    def one(self): raise NotImplementedError

    def zero(self):
        return self.scale(0, self.one())

    def add(self, a, b): return a + b
    def sub(self, a, b): return a - b
    def mul(self, a, b): return a * b
    def scale(self, c, a): return self.field(c) * a
    def is_zero(self, a) -> bool: return a.is_zero()

    def equal(self, a, b) -> bool:
        return self.is_zero(self.sub(a, b))

    def power(self, a, n: int):
        result = self.one()
        for _ in range(n):
            result = self.mul(result, a)
        return result

    def as_scalar(self, a) -> FieldElement | None:
        raise NotImplementedError


class MatrixContext(AlgebraContext):
    def __init__(self, field: Field, n: int):
        self.field, self.n = field, n

    def one(self):
        return Matrix.identity(self.field, self.n)

    def as_scalar(self, a: Matrix):
        return a.scalar_value()


class QuotientContext(AlgebraContext):
    """Free algebra modulo a rewrite system; elements are kept in normal form."""

    def __init__(self, rs: RewriteSystem):
        self.rs = rs
        self.field = rs.ring.field

    def one(self):
        return self.rs.ring.one()

    def element(self, p: NCPoly) -> NCPoly:
        return self.rs.normal_form(p)

    def mul(self, a, b):
        return self.rs.normal_form(a * b)

    def scale(self, c, a):
        return a * self.field(c)

    def as_scalar(self, a: NCPoly):
        a = self.rs.normal_form(a)
        return a.constant() if a.is_constant() else None


def iterated_commutator(mu, nu, k: int, ctx: AlgebraContext):
    """``[mu, nu]_k``: ``mu`` for k = 0, else ``nu*c - c*nu`` with ``c = [mu, nu]_{k-1}``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    c = mu
    for _ in range(k):
        c = ctx.sub(ctx.mul(nu, c), ctx.mul(c, nu))
    return c


def _commutator_chain(mu, nu, k: int, ctx: AlgebraContext) -> list:
    chain = [mu]
    for _ in range(k):
        c = chain[-1]
        chain.append(ctx.sub(ctx.mul(nu, c), ctx.mul(c, nu)))
    return chain


def decompose_rho(y, x, d: int, rho: FieldElement, ctx: AlgebraContext) -> list:
    """Split ``y`` into parts ``y_k`` with ``y_k x = rho^k x y_k``.

    ``x**d`` must be a nonzero scalar and ``rho`` a primitive d-th root of
    unity in a field of characteristic prime to d.
    """
    K = ctx.field
    p = K.characteristic
    if p and d % p == 0:
        raise PreconditionError(f"characteristic {p} divides d = {d}")
    rho = K(rho)
    if not (rho ** d).is_one() or any((rho ** k).is_one() for k in range(1, d)):
        raise PreconditionError(f"{rho} is not a primitive {d}th root of unity")
    xd = ctx.power(x, d)
    c = ctx.as_scalar(xd)
    if c is None or c.is_zero():
        raise PreconditionError("x^d is not a nonzero scalar, so x is not invertible d-central")
    x_inv = ctx.scale(c.inverse(), ctx.power(x, d - 1))
    conj = [y]
    for _ in range(d - 1):
        conj.append(ctx.mul(ctx.mul(x, conj[-1]), x_inv))
    inv_d = K(Fraction(1, d)) if p == 0 else K(d).inverse()
    parts = []
    for k in range(d):
        acc = None
        for j, cj in enumerate(conj):
            term = ctx.scale(rho ** (k * j), cj)
            acc = term if acc is None else ctx.add(acc, term)
        parts.append(ctx.scale(inv_d, acc))
    total = parts[0]
    for part in parts[1:]:
        total = ctx.add(total, part)
    if not ctx.equal(total, y):
        raise VerificationError("parts do not sum to y")
    for k, part in enumerate(parts):
        if not ctx.equal(ctx.mul(part, x), ctx.scale(rho ** k, ctx.mul(x, part))):
            raise VerificationError(f"part {k} does not rho^{k}-commute with x")
    return parts


@dataclass
class ArtinSchreierParts:
    """``z[k]`` satisfy ``[z_k, x] = k z_k``; ``t[k] = z[p-k]`` satisfy ``[x, t_k] = k t_k``.

    Brackets follow ``[mu, nu] = nu mu - mu nu``, so ``x z_k - z_k x = k z_k``.
    """

    z: list
    t: list


def _check_char(ctx: AlgebraContext, p: int) -> None:
    if ctx.field.characteristic != p:
        raise PreconditionError(
            f"characteristic mismatch: field has characteristic {ctx.field.characteristic}, expected {p}")


def decompose_artin_schreier(z, x, p: int, ctx: AlgebraContext) -> ArtinSchreierParts:
    """Eigen-decomposition of ``z`` under ``ad x`` for an Artin-Schreier ``x``."""
    _check_char(ctx, p)
    if ctx.as_scalar(ctx.sub(ctx.power(x, p), x)) is None:
        raise PreconditionError("x^p - x is not a scalar")
    K = ctx.field
    chain = _commutator_chain(z, x, p - 1, ctx)
    zs = [ctx.sub(z, chain[p - 1])]
    for k in range(1, p):
        acc = None
        for j in range(1, p):
            term = ctx.scale(K(k) ** (p - 1 - j), chain[j])
            acc = term if acc is None else ctx.add(acc, term)
        zs.append(ctx.scale(-1, acc))
    ts = [zs[0]] + [zs[p - k] for k in range(1, p)]
    return ArtinSchreierParts(zs, ts)


def decompose_pcentral(z, y, p: int, ctx: AlgebraContext) -> list:
    """Parts ``z_k`` with ``[z_0, y] = 0``, ``[z_k, y] = z_{k-1}`` and ``z = z_{p-1} - z_{p-2}``."""
    _check_char(ctx, p)
    if ctx.as_scalar(ctx.power(y, p)) is None:
        raise PreconditionError("y^p is not a scalar")
    chain = _commutator_chain(z, y, p - 1, ctx)
    parts = [chain[p - 1]]
    for k in range(1, p):
        acc = chain[p - 1 - k]
        for j in range(p - k, p):
            acc = ctx.add(acc, chain[j])
        parts.append(acc)
    return parts


def commutator(a, b, ctx: AlgebraContext | None = None):
    """Plain ``a b - b a``."""
    if ctx is None:
        return a * b - b * a
    return ctx.sub(ctx.mul(a, b), ctx.mul(b, a))
