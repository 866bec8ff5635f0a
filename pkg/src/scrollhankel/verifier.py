"""Run the structural claims about Hankel pair ideals on concrete instances.

Every verifier returns a :class:`Report` holding one :class:`Check` per
claim.  A check is ``pass`` when the claimed and computed values agree,
``fail`` otherwise, and ``flagged`` when a known misprint is being
adjudicated: the computed value is authoritative and the printed one is
kept alongside it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Iterable

import networkx as nx

from .closed_graphs import (
    ClosedGraph,
    combine,
    combined_edges,
    enumerate_connected_closed,
    facet_pair_intervals,
    from_edges,
)
from .groebner import (
    Ideal,
    contains,
    ideal_equal,
    intersect,
    is_groebner_basis,
    krull_dimension,
    monomial_prime,
    radical_membership,
)
from .hankel import MinorSpec, hankel_minor, pair_ideal, scroll_ideal, full_minor_ideal, telescoping_decomposition
from .polynomial import DEGREVLEX, QQ, Polynomial
from .resolution import BettiTable, graded_betti

PASS, FAIL, FLAGGED = "pass", "fail", "flagged"

# size caps (number of variables N = m + n - 1) for the expensive cross-checks
CM_CAP = 6
LINEAR_RES_CAP = 6
REG_CAP = 7
RADICAL_CAP = 7

# maximal cliques as printed for the (1-3,2-4,3-5) x (1-3,2-5) example
PRINTED_REMARK_CLIQUES = [[1, 3], [2, 6], [3, 7], [4, 8]]
REMARK_PAIR = (((1, 3), (2, 4), (3, 5)), ((1, 3), (2, 5)))

ALL_CHECKS = ("thm1.1", "cor", "prop2.1", "thm2.3", "prop2.4")


@dataclass
class Check:
    name: str
    status: str
    claimed: Any
    computed: Any
    paper_ref: str

    def to_json(self):
        return {
            "name": self.name,
            "status": self.status,
            "claimed": self.claimed,
            "computed": self.computed,
            "paper_ref": self.paper_ref,
        }


@dataclass
class Report:
    g1: ClosedGraph
    g2: ClosedGraph
    checks: list[Check] = field(default_factory=list)
    timings_ms: dict[str, float] = field(default_factory=dict)

    def add(self, name, claimed, computed, ref, status=None):
        if status is None:
            status = PASS if claimed == computed else FAIL
        self.checks.append(Check(name, status, claimed, computed, ref))

    def extend(self, other: "Report"):
        self.checks.extend(other.checks)
        self.timings_ms.update(other.timings_ms)

    @property
    def key(self):
        return (self.g1.n, self.g1.facets, self.g2.n, self.g2.facets)

    def count(self, status):
        return sum(c.status == status for c in self.checks)

    @property
    def ok(self):
        return self.count(FAIL) == 0

    def to_json(self, timings=True):
        out = {
            "instance": {"g1": self.g1.to_json(), "g2": self.g2.to_json()},
            "checks": [c.to_json() for c in self.checks],
        }
        if timings:
            out["timings_ms"] = {k: round(v, 3) for k, v in sorted(self.timings_ms.items())}
        return out


class _Timer:
    def __init__(self, report, label):
        self.report, self.label = report, label

    def __enter__(self):
        self.t0 = time.perf_counter()

    def __exit__(self, *exc):
        self.report.timings_ms[self.label] = (time.perf_counter() - self.t0) * 1000


def _check_inputs(g1, g2):
    combine(g1, g2)  # raises DegenerateInput on bad factors


def _gb_key(ideal: Ideal):
    gb = ideal.groebner_basis(DEGREVLEX)
    return (ideal.ring, gb.elements)


_BETTI_CACHE: dict = {}


def betti_of(ideal: Ideal) -> BettiTable:
    """Betti table memoized on the reduced basis; equal ideals share a table."""
    key = _gb_key(ideal)
    t = _BETTI_CACHE.get(key)
    if t is None:
        t = graded_betti(ideal)
        _BETTI_CACHE[key] = t
    return t


# --------------------------------------------------------------- claims


def verify_theorem_1_1(g1: ClosedGraph, g2: ClosedGraph, field=QQ) -> Report:
    rep = Report(g1, g2)
    ref = "G is connected and closed, and I_{G1,G2} = I_G"
    with _Timer(rep, "thm1.1"):
        g = combine(g1, g2)
        edges = combined_edges(g1, g2)
        closed = from_edges(g.n, edges) == g
        rep.add("thm1.1.closed_connected", True, bool(closed and g.is_connected), ref)

        pair = pair_ideal(g1, g2, field)
        scroll = scroll_ideal(g, field)
        rep.add("thm1.1.ideal_equal", True, ideal_equal(pair, scroll), ref)

        pair_gb = pair.groebner_basis(DEGREVLEX)
        scroll_gb = scroll.groebner_basis(DEGREVLEX)
        rep.add("thm1.1.pair_in_scroll", True, all(not scroll_gb.reduce(p) for p in pair.generators), ref)
        rep.add("thm1.1.scroll_in_pair", True, all(not pair_gb.reduce(h) for h in scroll.generators), ref)

        tele_ok = True
        for e in sorted(g1.edges):
            for f in sorted(g2.edges):
                spec = MinorSpec(g1.n, g2.n, e, f)
                parts = telescoping_decomposition(spec)
                total = Polynomial.zero(pair.ring)
                for h in parts:
                    total = total + h.polynomial(field)
                if total != hankel_minor(spec, field) or any((h.p, h.q) not in edges for h in parts):
                    tele_ok = False
        rep.add("thm1.1.telescoping", True, tele_ok, "g_{e,f} = h_{e_f} + g_{e',f'} chain sums to g_{e,f}")
    return rep


def verify_corollary(g1: ClosedGraph, g2: ClosedGraph, field=QQ, cm_cap: int = CM_CAP) -> Report:
    rep = Report(g1, g2)
    ref = "quadratic Groebner basis in revlex; Cohen-Macaulay of dimension 2"
    with _Timer(rep, "cor"):
        g = combine(g1, g2)
        scroll = scroll_ideal(g, field)
        rep.add("cor.generators_are_gb", True, is_groebner_basis(list(scroll.generators), DEGREVLEX), ref)
        pair = pair_ideal(g1, g2, field)
        degs = sorted({p.degree() for p in pair.groebner_basis(DEGREVLEX).elements})
        rep.add("cor.quadratic_gb", [2], degs, ref)
        dim = krull_dimension(pair)
        rep.add("cor.dimension", 2, dim, ref)
        if pair.ring.num_vars <= cm_cap:
            t = betti_of(pair)
            rep.add("cor.cohen_macaulay", {"depth": 2, "dim": 2}, {"depth": t.depth, "dim": dim}, ref)
    return rep


def maximal_cliques_oracle(n: int, edges) -> list[list[int]]:
    """Maximal cliques of an explicit edge set, as sorted vertex lists."""
    graph = nx.Graph()
    graph.add_nodes_from(range(1, n + 1))
    graph.add_edges_from(edges)
    return sorted(sorted(c) for c in nx.find_cliques(graph))


def verify_prop_2_1(g1: ClosedGraph, g2: ClosedGraph) -> Report:
    rep = Report(g1, g2)
    ref = "every maximal clique of G is [a+c-1, b+d-2] for facets [a,b] of G1, [c,d] of G2"
    with _Timer(rep, "prop2.1"):
        n = g1.n + g2.n - 2
        cliques = maximal_cliques_oracle(n, combined_edges(g1, g2))
        as_intervals = []
        for c in cliques:
            if c != list(range(c[0], c[-1] + 1)):
                as_intervals = None
                break
            as_intervals.append((c[0], c[-1]))
        pairs = facet_pair_intervals(g1, g2)
        matched = as_intervals is not None and all(iv in pairs for iv in as_intervals)
        rep.add("prop2.1.cliques_from_facet_pairs", True, matched, ref)

        maximal = set(as_intervals or [])
        non_max = sorted(iv for iv in pairs if iv not in maximal)
        rep.add(
            "prop2.1.non_maximal_pair_cliques",
            "facet-pair cliques need not be maximal",
            [{"clique": list(iv), "from": [list(map(list, fp)) for fp in pairs[iv]]} for iv in non_max],
            "[a+c-1, b+d-2] is a clique of G, not necessarily maximal",
            status=PASS,
        )
        rep.add(
            "prop2.1.decompositions",
            "decomposition of a maximal clique need not be unique",
            [{"clique": list(iv), "count": len(pairs.get(iv, []))} for iv in sorted(maximal)],
            "facet pairs are not determined by the clique",
            status=PASS,
        )
        if (g1.facets, g2.facets) == REMARK_PAIR:
            computed = [list(iv) for iv in sorted(maximal)]
            rep.add(
                "remark.clique_list",
                PRINTED_REMARK_CLIQUES,
                computed,
                "printed maximal cliques of G: [1,3],[2,6],[3,7],[4,8]",
                status=PASS if computed == PRINTED_REMARK_CLIQUES else FLAGGED,
            )
    return rep


# --------------------------------------------------------- classification


@dataclass
class ClassificationReport:
    g1: ClosedGraph
    g2: ClosedGraph
    is_prime_claimed: bool
    is_prime_computed: Any
    min_primes_claimed: list[str]
    min_primes_computed: Any
    is_radical_claimed: bool
    is_radical_computed: Any
    linear_resolution_claimed: bool
    linear_resolution_computed: Any
    assumptions: list[str]
    details: dict
    report: Report


def _radical_criterion(g1: ClosedGraph, g2: ClosedGraph) -> bool:
    def two_cliques(g):
        return g.facets == ((1, g.n - 1), (2, g.n))

    return (g1.is_complete and (g2.is_complete or two_cliques(g2))) or (
        g2.is_complete and (g1.is_complete or two_cliques(g1))
    )


def _non_prime_witness(ideal: Ideal, p1: Ideal, p2: Ideal):
    """``(f, g)`` with ``f in P1 \\ P2``, ``g in P2 \\ P1``, ``f*g`` in ``ideal``."""
    p2_gb = p2.groebner_basis(DEGREVLEX)
    for f in p1.groebner_basis(DEGREVLEX).elements:
        if not p2_gb.reduce(f):
            continue
        for g in p2.generators:
            if contains(p1, g) or contains(ideal, f) or contains(ideal, g):
                continue
            if contains(ideal, f * g):
                return {"f": f.to_string(), "g": g.to_string()}
    return None


def classify(g1: ClosedGraph, g2: ClosedGraph, field=QQ,
             linear_cap: int = LINEAR_RES_CAP, radical_cap: int = RADICAL_CAP) -> ClassificationReport:
    _check_inputs(g1, g2)
    rep = Report(g1, g2)
    m, n = g1.n, g2.n
    both_complete = g1.is_complete and g2.is_complete
    ideal = pair_ideal(g1, g2, field)
    ring = ideal.ring
    big_n = ring.num_vars
    p1 = full_minor_ideal(m, n, field)
    p2 = monomial_prime(ring, range(2, big_n))
    p1_name = f"I_{{K{m},K{n}}}"
    p2_name = "(" + ",".join(f"x{i}" for i in range(2, big_n)) + ")"
    assumptions = [f"{p1_name} is prime (classical result for Hankel 2-minors)"]
    details: dict = {}

    prime_claimed = both_complete
    radical_claimed = _radical_criterion(g1, g2)
    linear_claimed = both_complete
    min_claimed = [ideal.name] if both_complete else [p1_name, p2_name]

    with _Timer(rep, "thm2.3"):
        # containment in the claimed primes
        in_p1 = all(contains(p1, f) for f in ideal.generators)
        in_p2 = all(contains(p2, f) for f in ideal.generators)
        # incomparability
        p1_in_p2 = all(contains(p2, f) for f in p1.generators)
        p2_in_p1 = all(contains(p1, f) for f in p2.generators)
        details["contained_in_claimed_primes"] = in_p1 and (in_p2 or both_complete)
        details["claimed_primes_incomparable"] = not p1_in_p2 and not p2_in_p1

        if both_complete:
            prime_computed = ideal_equal(ideal, p1) and "assumed-cited"
            radical_computed = prime_computed and True
            min_computed = [ideal.name] if prime_computed else None
        else:
            inter = intersect(p1, p2)
            radical_computed = ideal_equal(ideal, inter)
            inter_gb = inter.groebner_basis(DEGREVLEX)
            sqrt_ok = None
            if big_n <= radical_cap:
                sqrt_ok = all(radical_membership(ideal, q) for q in inter_gb.elements)
                details["radical_equals_intersection"] = sqrt_ok
            if radical_computed:
                # I = P1 ∩ P2 with incomparable primes: f*g in I, f and g not
                witness = _non_prime_witness(ideal, p1, p2)
                details["non_prime_witness"] = witness
                prime_computed = False if witness else "undetermined"
            else:
                w = None
                for q in inter_gb.elements:
                    if not contains(ideal, q) and (big_n > radical_cap or radical_membership(ideal, q)):
                        w = q
                        break
                details["non_radical_witness"] = w.to_string() if w is not None else None
                # a non-radical ideal is not prime
                prime_computed = False if w is not None else "undetermined"
            min_ok = (
                details["contained_in_claimed_primes"]
                and details["claimed_primes_incomparable"]
                and sqrt_ok is not False
            )
            min_computed = [p1_name, p2_name] if min_ok else None

        rep.add("thm2.3.prime", prime_claimed, bool(prime_computed),
                "prime iff G1 and G2 are complete")
        rep.add("thm2.3.min_primes", min_claimed, min_computed,
                "Min = {I_{Km,Kn}, (x_2..x_{m+n-2})} unless both complete")
        rep.add("thm2.3.radical", radical_claimed, bool(radical_computed),
                "radical iff one factor complete and the other complete or <[1,k-1],[2,k]>")

        if big_n <= linear_cap:
            t = betti_of(ideal)
            linear_computed = t.has_linear_resolution()
            details["betti"] = t.to_json()["betti"]
            rep.add("thm2.3.linear_resolution", linear_claimed, linear_computed,
                    "linear resolution iff G1 and G2 are complete")
        else:
            linear_computed = None

    return ClassificationReport(
        g1, g2,
        prime_claimed, prime_computed,
        min_claimed, min_computed,
        radical_claimed, radical_computed,
        linear_claimed, linear_computed,
        assumptions, details, rep,
    )


def classification_json(cr: ClassificationReport) -> dict:
    out = cr.report.to_json()
    out["classification"] = {
        "prime": {"claimed": cr.is_prime_claimed, "computed": cr.is_prime_computed},
        "min_primes": {"claimed": cr.min_primes_claimed, "computed": cr.min_primes_computed},
        "radical": {"claimed": cr.is_radical_claimed, "computed": cr.is_radical_computed},
        "linear_resolution": {"claimed": cr.linear_resolution_claimed, "computed": cr.linear_resolution_computed},
        "assumptions": cr.assumptions,
        "details": cr.details,
    }
    return out


# ------------------------------------------------------------ regularity


def verify_prop_2_4(g1: ClosedGraph, g2: ClosedGraph, field=QQ, reg_cap: int = REG_CAP) -> Report:
    from .errors import CapExceeded

    rep = Report(g1, g2)
    m, n = g1.n, g2.n
    ideal = pair_ideal(g1, g2, field)
    if ideal.ring.num_vars > reg_cap:
        raise CapExceeded(f"regularity check capped at {reg_cap} variables")
    with _Timer(rep, "prop2.4"):
        g = combine(g1, g2)
        reg = betti_of(ideal).regularity
        cliques = g.max_clique_count
        line_pair = g1.is_line and g2.is_line
        rep.add("prop2.4.bound", True, reg <= cliques <= m + n - 3 <= m + n - 2,
                "reg(S/I) <= number of maximal cliques of G <= m+n-3")
        rep.add("prop2.4.line_extremal", line_pair, reg == m + n - 3,
                "reg(S/I) = m+n-3 iff G1 and G2 are line graphs")
        eq_cliques = reg == cliques
        rep.add("prop2.4.clique_equality", line_pair, eq_cliques,
                "reg(S/I) = max clique count of G iff G1 and G2 are line graphs",
                status=PASS if eq_cliques == line_pair else FLAGGED)
        printed = {"bound": m + n - 2, "equality_iff_line_pair": True}
        computed = {"reg": reg, "line_pair": line_pair}
        printed_ok = reg <= m + n - 2 and ((reg == m + n - 2) == line_pair)
        rep.add("prop2.4.printed_constant", printed, computed,
                "reg(S/I) <= m+n-2 with equality iff G1, G2 are line graphs",
                status=PASS if printed_ok else FLAGGED)
    return rep


# ------------------------------------------------------------------ sweep


def verify_instance(g1, g2, checks: Iterable[str] = ALL_CHECKS, field=QQ) -> Report:
    checks = set(ALL_CHECKS if "all" in checks else checks)
    _check_inputs(g1, g2)
    rep = Report(g1, g2)
    n_vars = g1.n + g2.n - 1
    if "thm1.1" in checks:
        rep.extend(verify_theorem_1_1(g1, g2, field))
    if "cor" in checks:
        rep.extend(verify_corollary(g1, g2, field))
    if "prop2.1" in checks:
        rep.extend(verify_prop_2_1(g1, g2))
    if "thm2.3" in checks:
        rep.extend(classify(g1, g2, field).report)
    if "prop2.4" in checks and n_vars <= REG_CAP:
        rep.extend(verify_prop_2_4(g1, g2, field))
    return rep


@dataclass
class SweepResult:
    reports: list[Report]
    aborted: Report | None = None

    @property
    def summary(self):
        return {s: sum(r.count(s) for r in self.reports) for s in (PASS, FAIL, FLAGGED)}

    @property
    def flagged_instances(self):
        return [r for r in self.reports if r.count(FLAGGED)]

    def to_json(self, timings=True):
        out = {
            "instances": len(self.reports),
            "summary": self.summary,
            "results": [r.to_json(timings) for r in self.reports],
        }
        if self.aborted is not None:
            out["aborted_at"] = self.aborted.to_json(timings)
        return out


def sweep_pairs(max_m: int, max_n: int) -> list[tuple[ClosedGraph, ClosedGraph]]:
    left = [g for m in range(2, max_m + 1) for g in enumerate_connected_closed(m)]
    right = [g for n in range(2, max_n + 1) for g in enumerate_connected_closed(n)]
    return [(a, b) for a in left for b in right]


def sweep(max_m: int, max_n: int, checks: Iterable[str] = ALL_CHECKS, field=QQ,
          pairs: list | None = None) -> SweepResult:
    if max_m < 2 or max_n < 2:
        raise ValueError("sweep caps must be at least 2")
    checks = tuple(checks)
    pairs = pairs if pairs is not None else sweep_pairs(max_m, max_n)
    reports = []
    for g1, g2 in pairs:
        rep = verify_instance(g1, g2, checks, field)
        if not rep.ok:
            return SweepResult(sorted(reports, key=lambda r: r.key), aborted=rep)
        reports.append(rep)
    return SweepResult(sorted(reports, key=lambda r: r.key))
