"""Buchberger's algorithm and the ideal toolbox built on reduced bases."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import NotProper, RingMismatch, ZeroIdeal
from .polynomial import (
    DEGREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    RingSpec,
    _basis_data,
    block_order,
    mono_degree,
    mono_divides,
    mono_lcm,
    normal_form,
    reduce_terms,
    s_polynomial,
)


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingSpec
    order: MonomialOrder
    elements: tuple[Polynomial, ...]

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def reduce(self, f: Polynomial) -> Polynomial:
        if not self.elements:
            return f
        return normal_form(f, list(self.elements), self.order)

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].degree() == 0

    def to_strings(self) -> list[str]:
        return [g.to_string(self.order) for g in self.elements]

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ring == other.ring and self.order == other.order and self.elements == other.elements

    def __hash__(self):
        return hash((self.ring, self.order, self.elements))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class MonomialIdeal:
    ring: RingSpec
    minimal_generators: tuple[Monomial, ...]

    def contains(self, mono: Monomial) -> bool:
        return any(mono_divides(g, mono) for g in self.minimal_generators)

    def lcm_degree(self) -> int:
        """Total degree of the lcm of all minimal generators."""
        if not self.minimal_generators:
            return 0
        acc = self.minimal_generators[0]
        for g in self.minimal_generators[1:]:
            acc = mono_lcm(acc, g)
        return mono_degree(acc)


def minimalize_monomials(monos: Iterable[Monomial]) -> tuple[Monomial, ...]:
    ms = sorted(set(monos), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in ms:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return tuple(out)


class Ideal:
    """Generators in a fixed ring plus a per-order cache of reduced bases."""

    def __init__(self, ring: RingSpec, generators: Iterable[Polynomial], name: str | None = None):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatch(f"generator in {g.ring}, ideal in {ring}")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self.name = name
        self._cache: dict[MonomialOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    def groebner_basis(self, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
        gb = self._cache.get(order)
        if gb is None:
            gb = buchberger(self.generators, order, ring=self.ring)
            with self._lock:
                gb = self._cache.setdefault(order, gb)
        return gb

    def is_zero(self) -> bool:
        return not self.generators

    def __repr__(self):
        label = self.name or "Ideal"
        return f"<{label} in {self.ring.num_vars} vars, {len(self.generators)} generators>"


# ------------------------------------------------------------ Buchberger


def _chain_skip(i, j, lms, lcm_ij, pending, n_basis):
    for k in range(n_basis):
        if k == i or k == j:
            continue
        if not mono_divides(lms[k], lcm_ij):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder = DEGREVLEX,
    ring: RingSpec | None = None,
) -> GroebnerBasis:
    """Reduced, monic Gröbner basis of the ideal generated by ``gens``.

    Pairs are taken by smallest lcm degree (ties broken by index pair).
    Pairs with coprime leading monomials are dropped, and so are pairs
    covered by the chain criterion.
    """
    gens = [g for g in gens if g]
    if ring is None:
        if not gens:
            raise ValueError("ring required for an empty generator list")
        ring = gens[0].ring
    if not gens:
        return GroebnerBasis(ring, order, ())
    fld = ring.field
    key = order.key

    basis: list[Polynomial] = []
    lms: list[Monomial] = []
    data: list = []
    for g in gens:
        r = reduce_terms(dict(g.terms), data, fld, key) if data else dict(g.terms)
        if not r:
            continue
        p = Polynomial(ring, r, _trusted=True).monic(order)
        basis.append(p)
        lms.append(p.leading_monomial(order))
        data = _basis_data(basis, order)

    pending: set[tuple[int, int]] = set(combinations(range(len(basis)), 2))
    while pending:
        if any(sum(lm) == 0 for lm in lms):
            break
        i, j = min(pending, key=lambda ij: (sum(mono_lcm(lms[ij[0]], lms[ij[1]])), ij))
        pending.discard((i, j))
        lcm_ij = mono_lcm(lms[i], lms[j])
        if all(a == 0 or b == 0 for a, b in zip(lms[i], lms[j])):
            continue
        if _chain_skip(i, j, lms, lcm_ij, pending, len(basis)):
            continue
        s = s_polynomial(basis[i], basis[j], order)
        r = reduce_terms(dict(s.terms), data, fld, key)
        if not r:
            continue
        p = Polynomial(ring, r, _trusted=True).monic(order)
        new = len(basis)
        basis.append(p)
        lms.append(p.leading_monomial(order))
        data = _basis_data(basis, order)
        pending.update((k, new) for k in range(new))

    reduced = _interreduce(basis, order)
    gb = GroebnerBasis(ring, order, reduced)
    for g in gens:
        if gb.reduce(g):
            raise RuntimeError(f"input generator {g} does not reduce to zero")
    return gb


def _interreduce(basis: list[Polynomial], order: MonomialOrder) -> tuple[Polynomial, ...]:
    if not basis:
        return ()
    ring = basis[0].ring
    if any(g.degree() == 0 for g in basis):
        return (Polynomial.constant(ring, 1),)
    items = [(g.leading_monomial(order), g) for g in basis]
    minimal = []
    for idx, (lm, g) in enumerate(items):
        dominated = False
        for jdx, (lm2, _) in enumerate(items):
            if jdx == idx:
                continue
            if mono_divides(lm2, lm) and (lm2 != lm or jdx < idx):
                dominated = True
                break
        if not dominated:
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        lm = g.leading_monomial(order)
        tail = Polynomial(ring, {m: c for m, c in g.terms.items() if m != lm}, _trusted=True)
        if others and tail:
            tail = normal_form(tail, others, order)
        out.append((Polynomial(ring, {lm: 1}, _trusted=True) + tail).monic(order))
    out.sort(key=lambda p: order.key(p.leading_monomial(order)), reverse=True)
    return tuple(out)


def is_groebner_basis(polys: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX) -> bool:
    """Every S-polynomial of ``polys`` reduces to zero against ``polys``."""
    polys = [p for p in polys if p]
    for f, g in combinations(polys, 2):
        if normal_form(s_polynomial(f, g, order), polys, order):
            return False
    return True


# --------------------------------------------------------- ideal toolbox


def contains(ideal: Ideal, f: Polynomial, order: MonomialOrder = DEGREVLEX) -> bool:
    if f.ring != ideal.ring:
        raise RingMismatch(f"{f.ring} vs {ideal.ring}")
    return not ideal.groebner_basis(order).reduce(f)


def ideal_equal(a: Ideal, b: Ideal, order: MonomialOrder = DEGREVLEX) -> bool:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    return a.groebner_basis(order).elements == b.groebner_basis(order).elements


def _prepend_var(ring: RingSpec) -> RingSpec:
    return RingSpec(ring.num_vars + 1, ring.field)


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """``a ∩ b`` by eliminating ``t`` from ``t*a + (1-t)*b``."""
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    ring = a.ring
    big = _prepend_var(ring)
    lift = lambda p: p.change_ring(big, lambda m: (0,) + m)  # noqa: E731
    t = Polynomial.variable(big, 1)
    one = Polynomial.constant(big, 1)
    gens = [t * lift(f) for f in a.generators] + [(one - t) * lift(g) for g in b.generators]
    order = block_order(1)
    gb = buchberger(gens, order, ring=big)
    kept = [g for g in gb.elements if all(m[0] == 0 for m in g.terms)]
    return Ideal(ring, [g.change_ring(ring, lambda m: m[1:]) for g in kept])


def radical_membership(ideal: Ideal, f: Polynomial) -> bool:
    """``f`` lies in the radical iff ``1`` is in ``ideal + (t*f - 1)``."""
    ring = ideal.ring
    if f.ring != ring:
        raise RingMismatch(f"{f.ring} vs {ring}")
    big = _prepend_var(ring)
    lift = lambda p: p.change_ring(big, lambda m: (0,) + m)  # noqa: E731
    t = Polynomial.variable(big, 1)
    gens = [lift(g) for g in ideal.generators] + [t * lift(f) - 1]
    return buchberger(gens, block_order(1), ring=big).is_unit()


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(gb.ring, minimalize_monomials(gb.leading_monomials()))


def _min_cover_size(supports: list[int], num_vars: int) -> int:
    """Smallest number of variables meeting every support bitmask."""
    for size in range(num_vars + 1):
        for chosen in combinations(range(num_vars), size):
            mask = 0
            for v in chosen:
                mask |= 1 << v
            if all(s & mask for s in supports):
                return size
    raise AssertionError("unreachable: all variables always form a cover")


def monomial_dimension(init: MonomialIdeal) -> int:
    """Krull dimension of ``S / init`` via a minimum vertex cover."""
    supports = []
    for g in init.minimal_generators:
        mask = 0
        for i, e in enumerate(g):
            if e:
                mask |= 1 << i
        if mask == 0:
            raise NotProper("the unit ideal has no dimension")
        supports.append(mask)
    return init.ring.num_vars - _min_cover_size(supports, init.ring.num_vars)


def krull_dimension(ideal: Ideal, order: MonomialOrder = DEGREVLEX) -> int:
    if ideal.is_zero():
        raise ZeroIdeal("dimension of S/(0) is not computed here")
    gb = ideal.groebner_basis(order)
    if gb.is_unit():
        raise NotProper("ideal is the whole ring")
    return monomial_dimension(initial_ideal(gb))


def monomial_prime(ring: RingSpec, indices: Iterable[int]) -> Ideal:
    """The prime ideal generated by the listed variables (1-based)."""
    idx = sorted(set(indices))
    return Ideal(ring, [Polynomial.variable(ring, i) for i in idx],
                 name=f"({','.join(f'x{i}' for i in idx)})")
