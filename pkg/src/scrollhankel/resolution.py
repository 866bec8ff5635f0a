"""Graded Betti numbers of ``S/I`` through Koszul homology.

``beta_{i,j}`` is the dimension of ``H_i(x_1..x_N; S/I)`` in internal degree
``j``.  The chain spaces are ``wedge^i K^N (x) (S/I)_{j-i}`` with bases made
of standard monomials of a reduced Gröbner basis.  When every basis element
is also homogeneous for the weight ``wt(x_v) = v`` (true for all Hankel and
scroll ideals), the complex splits further by weight, which keeps each rank
computation small.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations

from .errors import CapExceeded, IncompleteTable, NotProper
from .groebner import Ideal, MonomialIdeal, initial_ideal
from .linalg import rank
from .polynomial import DEGREVLEX, Monomial, RingSpec

DEFAULT_MAX_VARS = 9


def max_vars_cap() -> int:
    return int(os.environ.get("SCROLLHANKEL_MAX_VARS", DEFAULT_MAX_VARS))


@dataclass
class BettiTable:
    ring: RingSpec
    entries: dict[tuple[int, int], int]
    complete_up_to: int
    complete: bool = True
    stats: dict = field(default_factory=dict, compare=False)

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    def nonzero(self):
        return sorted((ij, v) for ij, v in self.entries.items() if v)

    def _require_complete(self):
        if not self.complete:
            raise IncompleteTable(f"table only computed up to degree {self.complete_up_to}")

    @property
    def regularity(self) -> int:
        self._require_complete()
        return max(j - i for (i, j), v in self.entries.items() if v)

    @property
    def projective_dimension(self) -> int:
        self._require_complete()
        return max(i for (i, _), v in self.entries.items() if v)

    @property
    def depth(self) -> int:
        return self.ring.num_vars - self.projective_dimension

    def has_linear_resolution(self) -> bool:
        """The ideal has a linear resolution: all ``beta_{i,j}`` (i >= 1) on one strand."""
        self._require_complete()
        strands = {j - i for (i, j), v in self.entries.items() if v and i >= 1}
        return len(strands) <= 1

    def is_cohen_macaulay(self, dim: int) -> bool:
        return self.depth == dim

    def to_json(self) -> dict:
        return {
            "betti": [[i, j, v] for (i, j), v in self.nonzero()],
            "reg": self.regularity,
            "pd": self.projective_dimension,
            "depth": self.depth,
        }

    def to_text(self) -> str:
        """Macaulay2-style table: row ``r`` column ``i`` holds ``beta_{i,i+r}``."""
        nz = self.nonzero()
        cols = max((i for (i, _), _ in nz), default=0) + 1
        rows = max((j - i for (i, j), _ in nz), default=0) + 1
        totals = [sum(v for (i, _), v in nz if i == c) for c in range(cols)]
        cells = [[str(self[(c, c + r)] or ".") for c in range(cols)] for r in range(rows)]
        width = max([len(str(t)) for t in totals] + [len(x) for row in cells for x in row] + [len(str(cols - 1))])
        label_w = max(len("total:"), len(f"{rows - 1}:"))
        fmt = lambda label, xs: f"{label:>{label_w}} " + " ".join(f"{x:>{width}}" for x in xs)  # noqa: E731
        lines = [fmt("", [str(c) for c in range(cols)]), fmt("total:", [str(t) for t in totals])]
        lines += [fmt(f"{r}:", cells[r]) for r in range(rows)]
        return "\n".join(lines)


# ------------------------------------------------------ standard monomials


def standard_monomials(init: MonomialIdeal, d: int) -> list[Monomial]:
    """Degree-``d`` monomials outside ``init``, in decreasing degrevlex order."""
    n = init.ring.num_vars
    level = [(0,) * n] if not init.contains((0,) * n) else []
    for _ in range(d):
        nxt = []
        for b in level:
            last = max((k for k, e in enumerate(b) if e), default=0)
            for v in range(last, n):
                c = list(b)
                c[v] += 1
                c = tuple(c)
                if not init.contains(c):
                    nxt.append(c)
        level = nxt
    return sorted(level, key=DEGREVLEX.key, reverse=True)


class KoszulComplex:
    """Koszul complex of ``S/I`` on all variables, split by (degree, weight)."""

    def __init__(self, ideal: Ideal):
        self.ring = ideal.ring
        self.field = ideal.ring.field
        self.gb = ideal.groebner_basis(DEGREVLEX)
        if self.gb.is_unit():
            raise NotProper("S/I is zero")
        for g in self.gb.elements:
            if not g.is_homogeneous():
                raise ValueError("Koszul Betti numbers need a homogeneous ideal")
        self.init = initial_ideal(self.gb)
        n = self.ring.num_vars
        weights = tuple(range(1, n + 1))
        self.bigraded = all(g.is_homogeneous(weights) for g in self.gb.elements)
        self.var_weight = weights if self.bigraded else (0,) * n
        self._rules = []
        for g in self.gb.elements:
            lm = g.leading_monomial(DEGREVLEX)
            self._rules.append((lm, [(m, c) for m, c in g.terms.items() if m != lm]))
        self._nf: dict[Monomial, dict] = {}
        self._std: dict[int, dict[int, list[Monomial]]] = {}
        self._index: dict[tuple[int, int], dict] = {}
        self._rank: dict[tuple[int, int, int], int] = {}

    def weight(self, mono) -> int:
        return sum(a * b for a, b in zip(mono, self.var_weight))

    def standard(self, d: int) -> dict[int, list[Monomial]]:
        """Standard monomials of degree ``d`` grouped by weight."""
        if d not in self._std:
            groups: dict[int, list[Monomial]] = {}
            if d >= 0:
                for b in standard_monomials(self.init, d):
                    groups.setdefault(self.weight(b), []).append(b)
            self._std[d] = groups
        return self._std[d]

    def nf(self, mono: Monomial) -> dict:
        """Normal form of a monomial as {standard monomial: coefficient}."""
        hit = self._nf.get(mono)
        if hit is not None:
            return hit
        norm = self.field.normalize
        for lm, tail in self._rules:
            if all(a <= b for a, b in zip(lm, mono)):
                q = tuple(b - a for a, b in zip(lm, mono))
                out: dict = {}
                for tm, tc in tail:
                    sub = self.nf(tuple(a + b for a, b in zip(tm, q)))
                    for sm, sc in sub.items():
                        v = norm(out.get(sm, 0) - tc * sc)
                        if v:
                            out[sm] = v
                        else:
                            out.pop(sm, None)
                break
        else:
            out = {mono: 1}
        self._nf[mono] = out
        return out

    def basis(self, i: int, j: int, w: int) -> list[tuple[tuple[int, ...], Monomial]]:
        n = self.ring.num_vars
        d = j - i
        if i < 0 or i > n or d < 0:
            return []
        std = self.standard(d)
        out = []
        for s in combinations(range(n), i):
            ws = sum(self.var_weight[v] for v in s)
            for b in std.get(w - ws, ()):
                out.append((s, b))
        return out

    def weights(self, i: int, j: int) -> set[int]:
        n = self.ring.num_vars
        d = j - i
        if i < 0 or i > n or d < 0:
            return set()
        sub = {sum(self.var_weight[v] for v in s) for s in combinations(range(n), i)}
        return {ws + w for ws in sub for w in self.standard(d)}

    def _target_index(self, i, j, w):
        key = (i, j, w)
        idx = self._index.get(key)
        if idx is None:
            idx = {elt: k for k, elt in enumerate(self.basis(i, j, w))}
            self._index[key] = idx
        return idx

    def differential_vectors(self, i: int, j: int, w: int) -> list[dict]:
        """Images of the basis of ``K_{i,j,w}`` in coordinates of ``K_{i-1,j,w}``."""
        if i == 0:
            return [{} for _ in self.basis(0, j, w)]
        target = self._target_index(i - 1, j, w)
        norm = self.field.normalize
        vecs = []
        for s, b in self.basis(i, j, w):
            vec: dict = {}
            for pos, v in enumerate(s):
                sign = -1 if pos % 2 else 1
                rest = s[:pos] + s[pos + 1:]
                xb = list(b)
                xb[v] += 1
                for m, c in self.nf(tuple(xb)).items():
                    k = target[(rest, m)]
                    val = norm(vec.get(k, 0) + sign * c)
                    if val:
                        vec[k] = val
                    else:
                        vec.pop(k, None)
            vecs.append(vec)
        return vecs

    def rank(self, i: int, j: int, w: int) -> int:
        """Rank of the differential out of ``K_{i,j,w}``."""
        key = (i, j, w)
        r = self._rank.get(key)
        if r is None:
            if i <= 0 or i > self.ring.num_vars or j - i < 0:
                r = 0
            else:
                r = rank(self.differential_vectors(i, j, w), self.field)
            self._rank[key] = r
        return r

    def homology_dim(self, i: int, j: int) -> int:
        total = 0
        for w in self.weights(i, j):
            dim = len(self.basis(i, j, w))
            total += dim - self.rank(i, j, w) - self.rank(i + 1, j, w)
        return total

    def chain_dim(self, i: int, j: int) -> int:
        return sum(len(self.basis(i, j, w)) for w in self.weights(i, j))


def _row_bounds(init: MonomialIdeal, n: int) -> dict[int, int]:
    """Per homological degree, an upper bound for nonzero internal degrees.

    The Taylor resolution of ``in(I)`` lives in degrees given by lcms of
    ``i`` generators; Betti numbers of ``S/I`` are bounded by those of
    ``S/in(I)``.
    """
    total = init.lcm_degree()
    degs = sorted((sum(g) for g in init.minimal_generators), reverse=True)
    bounds = {0: 0}
    for i in range(1, n + 1):
        bounds[i] = min(total, sum(degs[:i])) if len(degs) >= i else -1
    return bounds


def graded_betti(ideal: Ideal, max_degree: int | None = None, max_vars: int | None = None) -> BettiTable:
    n = ideal.ring.num_vars
    cap = max_vars if max_vars is not None else max_vars_cap()
    if n > cap:
        raise CapExceeded(f"{n} variables exceeds the cap of {cap}")
    if ideal.is_zero():
        return BettiTable(ideal.ring, {(0, 0): 1}, 0)
    kc = KoszulComplex(ideal)
    bound = kc.init.lcm_degree()
    rows = _row_bounds(kc.init, n)
    complete = True
    if max_degree is not None and max_degree < bound:
        complete = False
        bound = max_degree
    entries = {}
    for i in range(0, n + 1):
        for j in range(i, min(rows[i], bound) + 1):
            h = kc.homology_dim(i, j)
            if h:
                entries[(i, j)] = h
    stats = {"bigraded": kc.bigraded, "cells": len(kc._rank)}
    return BettiTable(ideal.ring, entries, bound, complete, stats)


def regularity(t: BettiTable) -> int:
    return t.regularity


def proj_dim(t: BettiTable) -> int:
    return t.projective_dimension


def is_cohen_macaulay(t: BettiTable, dim: int) -> bool:
    return t.is_cohen_macaulay(dim)


def has_linear_resolution(t: BettiTable) -> bool:
    return t.has_linear_resolution()
