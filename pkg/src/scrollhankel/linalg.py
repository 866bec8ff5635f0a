"""Exact rank computations on sparse vectors.

Vectors are dicts mapping a column index to a nonzero field element.  Over
a prime field the vectors are densified and handed to the rank kernel;
over the rationals an incremental sparse echelon form is used, with rows
kept integral (fraction-free) and divided by their content.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

import numpy as np

from . import kernels


def _integral(vec: dict) -> dict:
    den = reduce(lcm, (Fraction(c).denominator for c in vec.values()), 1)
    out = {k: int(Fraction(c) * den) for k, c in vec.items()}
    g = reduce(gcd, out.values(), 0)
    if g > 1:
        out = {k: v // g for k, v in out.items()}
    return out


class SparseEchelon:
    """Incremental row echelon form over the integers (rational rank)."""

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    def reduce(self, vec: dict) -> dict:
        v = _integral(vec) if vec else {}
        pivots = self.pivots
        while v:
            col = min(v)
            row = pivots.get(col)
            if row is None:
                return v
            a, b = v[col], row[col]
            g = gcd(a, b)
            fa, fb = b // g, a // g
            out = {k: c * fa for k, c in v.items()}
            for k, c in row.items():
                s = out.get(k, 0) - c * fb
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
            cg = reduce(gcd, out.values(), 0)
            if cg > 1:
                out = {k: c // cg for k, c in out.items()}
            v = out
        return v

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; True if it was independent of earlier rows."""
        v = self.reduce(vec)
        if not v:
            return False
        self.pivots[min(v)] = v
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rational_rank(vectors) -> int:
    ech = SparseEchelon()
    for v in vectors:
        if v:
            ech.add(v)
    return ech.rank


def modp_rank(vectors, p: int) -> int:
    vectors = [v for v in vectors if v]
    if not vectors:
        return 0
    cols = sorted({k for v in vectors for k in v})
    index = {k: i for i, k in enumerate(cols)}
    mat = np.zeros((len(vectors), len(cols)), dtype=np.int64)
    for r, v in enumerate(vectors):
        for k, c in v.items():
            mat[r, index[k]] = int(c) % p
    if mat.shape[0] > mat.shape[1]:
        mat = np.ascontiguousarray(mat.T)
    return kernels.rank_mod_p(mat, p)


def rank(vectors, field) -> int:
    if field.characteristic == 0:
        return rational_rank(vectors)
    return modp_rank(vectors, field.characteristic)


def in_span(vectors, target: dict, field) -> bool:
    """Whether ``target`` is a linear combination of ``vectors``."""
    if not target:
        return True
    if field.characteristic == 0:
        ech = SparseEchelon()
        for v in vectors:
            if v:
                ech.add(v)
        return not ech.reduce(target)
    return rank(list(vectors), field) == rank(list(vectors) + [target], field)
