"""Hankel 2-minors, scroll binomial edge ideals and the telescoping identity.

For an ``m x n`` Hankel matrix with entries ``x_{r+c-1}`` the minor on rows
``{i, j}`` and columns ``{k, l}`` is

    g = x_{i+k-1} x_{j+l-1} - x_{j+k-1} x_{i+l-1}

and lives in ``N = m + n - 1`` variables.  The scroll generator of an edge
``{p, q}`` of a graph on ``[N-1]`` is ``h = x_p x_{q+1} - x_{p+1} x_q``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closed_graphs import ClosedGraph, complete
from .errors import DegenerateInput, IndexOutOfRange
from .groebner import Ideal
from .polynomial import QQ, Polynomial, RingSpec


def _binomial(ring: RingSpec, a: int, b: int, c: int, d: int) -> Polynomial:
    """``x_a x_b - x_c x_d``."""
    n = ring.num_vars
    p = [0] * n
    p[a - 1] += 1
    p[b - 1] += 1
    q = [0] * n
    q[c - 1] += 1
    q[d - 1] += 1
    return Polynomial(ring, {tuple(p): 1, tuple(q): -1})


@dataclass(frozen=True)
class MinorSpec:
    m: int
    n: int
    e: tuple[int, int]
    f: tuple[int, int]

    def __post_init__(self):
        (i, j), (k, l) = self.e, self.f
        if not (1 <= i < j <= self.m):
            raise IndexOutOfRange(f"row pair {self.e} invalid for m={self.m}")
        if not (1 <= k < l <= self.n):
            raise IndexOutOfRange(f"column pair {self.f} invalid for n={self.n}")

    @property
    def num_vars(self) -> int:
        return self.m + self.n - 1

    def combined_edge(self) -> tuple[int, int]:
        (i, j), (k, l) = self.e, self.f
        return (i + k - 1, j + l - 2)


@dataclass(frozen=True)
class ScrollGen:
    p: int
    q: int
    num_vars: int

    def __post_init__(self):
        if not (1 <= self.p < self.q <= self.num_vars - 1):
            raise IndexOutOfRange(f"edge ({self.p},{self.q}) invalid for {self.num_vars} variables")

    def polynomial(self, field=QQ) -> Polynomial:
        return _binomial(RingSpec(self.num_vars, field), self.p, self.q + 1, self.p + 1, self.q)


def hankel_minor(spec: MinorSpec, field=QQ) -> Polynomial:
    (i, j), (k, l) = spec.e, spec.f
    ring = RingSpec(spec.num_vars, field)
    return _binomial(ring, i + k - 1, j + l - 1, j + k - 1, i + l - 1)


def _dedup(polys):
    seen = set()
    out = []
    for p in polys:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def pair_generators(g1: ClosedGraph, g2: ClosedGraph, field=QQ) -> list[Polynomial]:
    """All ``g_{e,f}`` in edge order, before deduplication."""
    m, n = g1.n, g2.n
    return [
        hankel_minor(MinorSpec(m, n, e, f), field)
        for e in sorted(g1.edges)
        for f in sorted(g2.edges)
    ]


def pair_ideal(g1: ClosedGraph, g2: ClosedGraph, field=QQ) -> Ideal:
    if g1.n < 2 or g2.n < 2:
        raise DegenerateInput(f"both factors need at least 2 vertices, got {g1.n}, {g2.n}")
    if not (g1.is_connected and g2.is_connected):
        raise DegenerateInput("both factors must be connected")
    ring = RingSpec(g1.n + g2.n - 1, field)
    return Ideal(ring, _dedup(pair_generators(g1, g2, field)), name=f"I[{g1},{g2}]")


def scroll_ideal(g: ClosedGraph, field=QQ) -> Ideal:
    """Scroll binomial edge ideal of ``g`` in ``g.n + 1`` variables."""
    if not g.is_connected:
        raise DegenerateInput("graph must be connected")
    ring = RingSpec(g.n + 1, field)
    gens = [ScrollGen(p, q, g.n + 1).polynomial(field) for p, q in sorted(g.edges)]
    return Ideal(ring, gens, name=f"I_G[{g}]")


def full_minor_ideal(m: int, n: int, field=QQ) -> Ideal:
    """Ideal of all 2-minors of the generic ``m x n`` Hankel matrix."""
    return pair_ideal(complete(m), complete(n), field)


def telescoping_decomposition(spec: MinorSpec) -> list[ScrollGen]:
    """Scroll generators of the combined graph summing to ``hankel_minor(spec)``.

    Uses ``g_{e,f} = h_{e_f} + g_{e',f'}`` with ``e' = {i+1, j}`` and
    ``f' = {k, l-1}`` until a gap reaches 1, where ``g = h`` outright.  The
    chain has ``min(j-i, l-k)`` links.
    """
    (i, j), (k, l) = spec.e, spec.f
    out = []
    while True:
        out.append(ScrollGen(i + k - 1, j + l - 2, spec.num_vars))
        if j - i == 1 or l - k == 1:
            return out
        i, l = i + 1, l - 1
