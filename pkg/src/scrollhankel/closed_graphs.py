"""Closed graphs stored through the interval facets of their clique complex.

A closed graph on ``[n]`` (with a closed labeling) is determined by its
maximal cliques, which are intervals ``[a_1, b_1], ..., [a_r, b_r]`` with
``1 = a_1 < ... < a_r`` and ``b_1 < ... < b_r = n``.  Vertices are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DegenerateInput, MalformedFacets, NotClosed, ParseError

Edge = tuple[int, int]
Interval = tuple[int, int]


@dataclass(frozen=True)
class ClosedGraph:
    n: int
    facets: tuple[Interval, ...]

    def __post_init__(self):
        _check_facets(self.n, self.facets)

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset(
            (p, q) for a, b in self.facets for p, q in combinations(range(a, b + 1), 2)
        )

    @property
    def is_connected(self) -> bool:
        return all(self.facets[i + 1][0] <= self.facets[i][1] for i in range(len(self.facets) - 1))

    @property
    def is_complete(self) -> bool:
        return len(self.facets) == 1

    @property
    def is_line(self) -> bool:
        """True for the path 1 - 2 - ... - n (n >= 2)."""
        return self.n >= 2 and all(b == a + 1 for a, b in self.facets)

    @property
    def max_clique_count(self) -> int:
        return len(self.facets)

    def to_spec(self) -> str:
        return ",".join(f"{a}-{b}" for a, b in self.facets)

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [[a, b] for a, b in self.facets]}

    def __str__(self):
        return self.to_spec()


def _check_facets(n, facets):
    if not isinstance(n, int) or n < 1:
        raise MalformedFacets(f"vertex count must be a positive integer, got {n!r}")
    if not facets:
        raise MalformedFacets("empty facet list")
    for a, b in facets:
        if not (1 <= a <= b <= n):
            raise MalformedFacets(f"interval [{a},{b}] is not inside [1,{n}]")
    for (a0, b0), (a1, b1) in zip(facets, facets[1:]):
        if a1 <= a0 and b1 >= b0 or a0 <= a1 and b0 >= b1:
            raise MalformedFacets(f"interval [{a0},{b0}] and [{a1},{b1}] are nested")
        if not (a0 < a1 and b0 < b1):
            raise MalformedFacets(f"intervals not sorted: [{a0},{b0}] before [{a1},{b1}]")
        if a1 > b0 + 1:
            raise MalformedFacets(f"vertices {b0 + 1}..{a1 - 1} are not covered")
    if facets[0][0] != 1:
        raise MalformedFacets("first interval must start at 1")
    if facets[-1][1] != n:
        raise MalformedFacets(f"last interval must end at {n}")


def from_facets(n: int, intervals: Iterable[Iterable[int]]) -> ClosedGraph:
    facets = []
    for iv in intervals:
        a, b = iv
        facets.append((int(a), int(b)))
    return ClosedGraph(n, tuple(facets))


def _normalize_edges(n, edges) -> set[Edge]:
    out = set()
    for e in edges:
        p, q = sorted(e)
        if p == q or p < 1 or q > n:
            raise MalformedFacets(f"invalid edge {tuple(e)} on [1,{n}]")
        out.add((p, q))
    return out


def closedness_witness(n: int, edges: Iterable[Edge]) -> tuple[int, int, int] | None:
    """First triple (i, k, j) violating closedness, or None."""
    es = _normalize_edges(n, edges)
    for i, j in sorted(es):
        for k in range(i + 1, j):
            if (i, k) not in es or (k, j) not in es:
                return (i, k, j)
    return None


def from_edges(n: int, edges: Iterable[Edge]) -> ClosedGraph:
    es = _normalize_edges(n, edges)
    witness = closedness_witness(n, es)
    if witness is not None:
        i, k, j = witness
        raise NotClosed(f"edge {{{i},{j}}} present but {k} is not adjacent to both ends", witness)
    reach = {a: a for a in range(1, n + 1)}
    for p, q in es:
        reach[p] = max(reach[p], q)
    facets = []
    for a in range(1, n + 1):
        b = reach[a]
        # [a, b] is maximal iff no earlier interval reaches b
        if not facets or b > facets[-1][1]:
            facets.append((a, b))
    return ClosedGraph(n, tuple(facets))


def complete(n: int) -> ClosedGraph:
    return ClosedGraph(n, ((1, n),))


def line(n: int) -> ClosedGraph:
    if n < 2:
        return complete(n)
    return ClosedGraph(n, tuple((i, i + 1) for i in range(1, n)))


def combined_edges(g1: ClosedGraph, g2: ClosedGraph) -> frozenset[Edge]:
    """Edge set ``{i+k-1, j+l-2}`` over edge pairs of the two factors."""
    return frozenset((i + k - 1, j + l - 2) for i, j in g1.edges for k, l in g2.edges)


def facet_pair_intervals(g1: ClosedGraph, g2: ClosedGraph) -> dict[Interval, list[tuple[Interval, Interval]]]:
    """Map each interval ``[a+c-1, b+d-2]`` to the facet pairs producing it."""
    out: dict[Interval, list[tuple[Interval, Interval]]] = {}
    for f1 in g1.facets:
        for f2 in g2.facets:
            iv = (f1[0] + f2[0] - 1, f1[1] + f2[1] - 2)
            out.setdefault(iv, []).append((f1, f2))
    return out


def maximal_intervals(intervals: Iterable[Interval]) -> list[Interval]:
    ivs = set(intervals)
    keep = [
        (a, b) for a, b in ivs
        if not any((c, d) != (a, b) and c <= a and b <= d for c, d in ivs)
    ]
    return sorted(keep)


def combine(g1: ClosedGraph, g2: ClosedGraph) -> ClosedGraph:
    """Graph on ``[m+n-2]`` attached to a pair of connected closed graphs."""
    m, n = g1.n, g2.n
    if m < 2 or n < 2:
        raise DegenerateInput(f"both factors need at least 2 vertices, got m={m}, n={n}")
    if not (g1.is_connected and g2.is_connected):
        raise DegenerateInput("both factors must be connected")
    g = from_edges(m + n - 2, combined_edges(g1, g2))
    by_pairs = maximal_intervals(facet_pair_intervals(g1, g2))
    if list(g.facets) != by_pairs:
        raise RuntimeError(
            f"facet-pair construction {by_pairs} disagrees with edge definition {list(g.facets)}"
        )
    return g


def _connected_tails(a: int, b: int, n: int) -> Iterator[list[Interval]]:
    if b == n:
        yield []
        return
    for a2 in range(a + 1, b + 1):
        for b2 in range(b + 1, n + 1):
            for rest in _connected_tails(a2, b2, n):
                yield [(a2, b2)] + rest


def enumerate_connected_closed(n: int) -> list[ClosedGraph]:
    """All connected closed graphs on ``[n]`` in lexicographic facet order."""
    if n < 2:
        raise DegenerateInput("need n >= 2")
    seqs = [[(1, b)] + tail for b in range(2, n + 1) for tail in _connected_tails(1, b, n)]
    return [ClosedGraph(n, tuple(s)) for s in sorted(seqs)]


def max_clique_count(g: ClosedGraph) -> int:
    return g.max_clique_count


_INTERVAL_RE = re.compile(r"(\d+)-(\d+)")


def parse_graph_spec(s: str) -> ClosedGraph:
    """Parse ``K5``, ``L5`` or a comma-separated interval list like ``1-3,2-4,3-5``."""
    text = s.strip()
    if not text:
        raise ParseError("empty graph spec", 0)
    head = text[0]
    if head in "KL":
        digits = text[1:]
        if not digits.isdigit():
            raise ParseError(f"expected an integer after {head!r}", 1)
        n = int(digits)
        if n < 1:
            raise ParseError("vertex count must be positive", 1)
        return complete(n) if head == "K" else line(n)
    intervals = []
    pos = 0
    for chunk in text.split(","):
        m = _INTERVAL_RE.fullmatch(chunk.strip())
        if m is None:
            raise ParseError(f"bad interval {chunk!r}", pos)
        intervals.append((int(m.group(1)), int(m.group(2))))
        pos += len(chunk) + 1
    n = max(b for _, b in intervals)
    return from_facets(n, intervals)
