"""Exact sparse multivariate polynomials, monomial orders and division.

Monomials are plain tuples of exponents; variable ``x_i`` (1-based) sits at
tuple position ``i - 1``.  Polynomials map monomials to nonzero coefficients
of a :class:`RationalField` or :class:`PrimeField`.

Every ideal handled by this package is homogeneous, so plain reverse
lexicographic comparisons coincide with degree-revlex; ``degrevlex`` is used
throughout.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Callable, Iterable, Mapping

from .errors import ParseError, RingMismatch

Monomial = tuple[int, ...]


# ----------------------------------------------------------------- fields


class RationalField:
    """Exact rationals; integral values are kept as ``int`` for speed."""

    characteristic = 0
    name = "rational"

    def convert(self, c):
        if isinstance(c, Fraction):
            return c.numerator if c.denominator == 1 else c
        if isinstance(c, int):
            return c
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else c

    def normalize(self, c):
        if type(c) is Fraction and c.denominator == 1:
            return c.numerator
        return c

    def inv(self, c):
        if type(c) is int:
            return 1 if c == 1 else (-1 if c == -1 else Fraction(1, c))
        return self.normalize(1 / c)

    def div(self, a, b):
        return self.normalize(Fraction(a) / b)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField:
    """Integers modulo an odd prime, stored as representatives in ``[0, p)``."""

    name = "prime"

    def __init__(self, p: int = 32003):
        if p == 2 or not _is_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p}")
        self.p = p
        self.characteristic = p

    def convert(self, c):
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def normalize(self, c):
        return c % self.p

    def inv(self, c):
        return pow(c, -1, self.p)

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def field_from_name(name: str):
    """``rational``, ``prime`` (32003) or ``prime:<p>``."""
    if name in ("rational", "QQ"):
        return QQ
    if name == "prime":
        return PrimeField()
    if name.startswith("prime:"):
        return PrimeField(int(name.split(":", 1)[1]))
    raise ValueError(f"unknown coefficient field {name!r}")


@dataclass(frozen=True)
class RingSpec:
    num_vars: int
    field: object = field(default=QQ)

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("need at least one variable")

    def one(self) -> Monomial:
        return (0,) * self.num_vars

    def var(self, i: int) -> Monomial:
        """Exponent vector of ``x_i`` (1-based)."""
        if not 1 <= i <= self.num_vars:
            raise IndexError(f"x{i} not in a ring with {self.num_vars} variables")
        e = [0] * self.num_vars
        e[i - 1] = 1
        return tuple(e)


# ----------------------------------------------------------- monomials


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mono_div(v: Monomial, u: Monomial) -> Monomial:
    return tuple(b - a for a, b in zip(u, v))


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_degree(u: Monomial) -> int:
    return sum(u)


def mono_str(u: Monomial) -> str:
    parts = []
    for i, e in enumerate(u, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


# -------------------------------------------------------------- orders


def _degrevlex_key(u):
    return (sum(u), tuple(-e for e in reversed(u)))


def _lex_key(u):
    return u


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order with ``x_1 > x_2 > ... > x_N``.

    ``block`` orders compare the first ``split`` variables first (with
    ``inner[0]``) and break ties on the rest (with ``inner[1]``); they are
    elimination orders for the first block.
    """

    kind: str
    split: int = 0
    inner: tuple = ()

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown order {self.kind!r}")
        key = {"degrevlex": _degrevlex_key, "lex": _lex_key}.get(self.kind)
        if key is None:
            k = self.split
            k1, k2 = self.inner[0].key, self.inner[1].key
            key = lambda u: (k1(u[:k]), k2(u[k:]))  # noqa: E731
        object.__setattr__(self, "key", key)

    def compare(self, u: Monomial, v: Monomial) -> int:
        if len(u) != len(v):
            raise RingMismatch(f"monomials of length {len(u)} and {len(v)}")
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def __str__(self):
        if self.kind == "block":
            return f"block({self.split};{self.inner[0]},{self.inner[1]})"
        return self.kind


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def block_order(split: int, first: MonomialOrder = DEGREVLEX, rest: MonomialOrder = DEGREVLEX) -> MonomialOrder:
    return MonomialOrder("block", split, (first, rest))


def order_from_name(name: str) -> MonomialOrder:
    if name == "degrevlex":
        return DEGREVLEX
    if name == "lex":
        return LEX
    raise ValueError(f"unknown order {name!r}")


def compare(order: MonomialOrder, u: Monomial, v: Monomial) -> int:
    return order.compare(u, v)


# --------------------------------------------------------- polynomials


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[Monomial, object] | None = None, *, _trusted=False):
        self.ring = ring
        if _trusted:
            self.terms = terms
        else:
            conv = ring.field.convert
            clean = {}
            for mono, c in (terms or {}).items():
                mono = tuple(mono)
                if len(mono) != ring.num_vars:
                    raise RingMismatch(f"monomial {mono} in a ring with {ring.num_vars} variables")
                c = conv(c)
                if c:
                    clean[mono] = clean.get(mono, 0) + c
            fld = ring.field
            self.terms = {m: fld.normalize(c) for m, c in clean.items() if fld.normalize(c)}
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, ring):
        return cls(ring, {}, _trusted=True)

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, {ring.one(): c})

    @classmethod
    def variable(cls, ring, i):
        return cls(ring, {ring.var(i): 1}, _trusted=True)

    @classmethod
    def monomial(cls, ring, mono, c=1):
        return cls(ring, {tuple(mono): c})

    # basic queries
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, weights: Iterable[int] | None = None):
        if weights is None:
            degs = {sum(m) for m in self.terms}
        else:
            w = tuple(weights)
            degs = {sum(a * b for a, b in zip(m, w)) for m in self.terms}
        return len(degs) <= 1

    def support(self) -> set[int]:
        """1-based indices of variables occurring in the polynomial."""
        return {i + 1 for m in self.terms for i, e in enumerate(m) if e}

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> Polynomial:
        if not self.terms:
            return self
        fld = self.ring.field
        inv = fld.inv(self.leading_coefficient(order))
        if inv == 1:
            return self
        return Polynomial(self.ring, {m: fld.normalize(c * inv) for m, c in self.terms.items()}, _trusted=True)

    # arithmetic
    def _check(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.ring, other)
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        fld = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = fld.normalize(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        fld = self.ring.field
        return Polynomial(self.ring, {m: fld.normalize(-c) for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c, mono: Monomial | None = None) -> Polynomial:
        fld = self.ring.field
        c = fld.convert(c)
        if not c:
            return Polynomial.zero(self.ring)
        if mono is None:
            return Polynomial(self.ring, {m: fld.normalize(a * c) for m, a in self.terms.items()}, _trusted=True)
        return Polynomial(
            self.ring, {mono_mul(m, mono): fld.normalize(a * c) for m, a in self.terms.items()}, _trusted=True
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        fld = self.ring.field
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        out = {m: fld.normalize(c) for m, c in out.items()}
        return Polynomial(self.ring, {m: c for m, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial.constant(self.ring, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.ring, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def change_ring(self, ring: RingSpec, embed: Callable[[Monomial], Monomial] | None = None) -> Polynomial:
        """Re-home the polynomial, optionally mapping exponent vectors."""
        embed = embed or (lambda m: m)
        return Polynomial(ring, {embed(m): c for m, c in self.terms.items()})

    # text
    def to_string(self, order: MonomialOrder = DEGREVLEX, normalize: bool = True) -> str:
        """Canonical text: terms in decreasing order.

        With ``normalize`` (rational coefficients only) the polynomial is
        scaled to a primitive integer polynomial with positive leading
        coefficient.
        """
        terms = self.sorted_terms(order)
        if not terms:
            return "0"
        if normalize and self.ring.field.characteristic == 0:
            den = reduce(lcm, (Fraction(c).denominator for _, c in terms), 1)
            ints = [int(Fraction(c) * den) for _, c in terms]
            g = reduce(gcd, ints)
            if ints[0] < 0:
                g = -g
            terms = [(m, v // g) for (m, _), v in zip(terms, ints)]
        p = self.ring.field.characteristic
        if p:
            # symmetric representatives so small integers print as over QQ
            terms = [(m, c - p if c > p // 2 else c) for m, c in terms]
        out = []
        for idx, (m, c) in enumerate(terms):
            neg = c < 0
            a = -c if neg else c
            ms = mono_str(m)
            if ms == "1":
                body = str(a)
            elif a == 1:
                body = ms
            else:
                body = f"{a}*{ms}"
            if idx == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.to_string(DEGREVLEX, normalize=False)

    def __repr__(self):
        return f"Polynomial({self.to_string(DEGREVLEX, normalize=False)!r})"


_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>x(?P<idx>\d+)(?:\^(?P<exp>\d+))?)|(?P<op>[-+*]))")


def parse_polynomial(text: str, ring: RingSpec) -> Polynomial:
    """Parse the grammar ``term (('+'|'-') term)*`` with terms like ``3*x1*x2^2``."""
    tokens = []
    pos = 0
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m, m.end() - len(m.group().lstrip())))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial", 0)
    terms: dict = {}
    i = 0
    sign = 1
    first = True
    while i < len(tokens):
        tok, tpos = tokens[i]
        if tok.group("op") in ("+", "-"):
            sign = -1 if tok.group("op") == "-" else 1
            i += 1
            if i >= len(tokens):
                raise ParseError("dangling sign", tpos)
            tok, tpos = tokens[i]
        elif not first:
            raise ParseError("expected '+' or '-'", tpos)
        first = False
        coeff = Fraction(1)
        mono = [0] * ring.num_vars
        expect_factor = True
        while i < len(tokens) and expect_factor:
            tok, tpos = tokens[i]
            if tok.group("num") is not None:
                coeff *= Fraction(tok.group("num"))
            elif tok.group("var") is not None:
                idx = int(tok.group("idx"))
                if not 1 <= idx <= ring.num_vars:
                    raise ParseError(f"x{idx} outside x1..x{ring.num_vars}", tpos)
                mono[idx - 1] += int(tok.group("exp") or 1)
            else:
                raise ParseError("expected a coefficient or variable", tpos)
            i += 1
            if i < len(tokens) and tokens[i][0].group("op") == "*":
                i += 1
                if i >= len(tokens):
                    raise ParseError("dangling '*'", tokens[i - 1][1])
            else:
                expect_factor = False
        key = tuple(mono)
        terms[key] = terms.get(key, 0) + sign * coeff
    return Polynomial(ring, terms)


# ------------------------------------------------------------ division


def _basis_data(basis, order):
    data = []
    for g in basis:
        if not g:
            raise ValueError("zero polynomial in a division basis")
        lm = g.leading_monomial(order)
        fld = g.ring.field
        inv = fld.inv(g.terms[lm])
        tail = [(m, fld.normalize(c * inv)) for m, c in g.terms.items() if m != lm]
        data.append((lm, tail))
    return data


def reduce_terms(p: dict, data, fld, key) -> dict:
    """Fully reduce the term dict ``p`` (consumed) against prepared basis data.

    The largest remaining term is handled first and is divided by the first
    basis element whose leading monomial divides it.
    """
    rem = {}
    norm = fld.normalize
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        for lm, tail in data:
            if all(a <= b for a, b in zip(lm, m)):
                q = tuple(b - a for a, b in zip(lm, m))
                for tm, tc in tail:
                    mm = tuple(a + b for a, b in zip(tm, q))
                    v = norm(p.get(mm, 0) - c * tc)
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = c
    return rem


def normal_form(f: Polynomial, basis: list[Polynomial], order: MonomialOrder = DEGREVLEX) -> Polynomial:
    for g in basis:
        if g.ring != f.ring:
            raise RingMismatch(f"{g.ring} vs {f.ring}")
    rem = reduce_terms(dict(f.terms), _basis_data(basis, order), f.ring.field, order.key)
    return Polynomial(f.ring, rem, _trusted=True)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """``lcm/LT(f) * f - lcm/LT(g) * g`` with both inputs made monic first."""
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    f, g = f.monic(order), g.monic(order)
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    l = mono_lcm(lf, lg)
    return f.scale(1, mono_div(l, lf)) - g.scale(1, mono_div(l, lg))
