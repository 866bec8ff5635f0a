"""Acceptance gate: one test per criterion, reported in the terminal summary."""

import random
import time

from scrollhankel.closed_graphs import combine, complete, enumerate_connected_closed, from_facets, line
from scrollhankel.groebner import contains, ideal_equal, intersect, is_groebner_basis, krull_dimension, monomial_prime, radical_membership
from scrollhankel.hankel import MinorSpec, hankel_minor, pair_ideal, scroll_ideal, telescoping_decomposition
from scrollhankel.polynomial import DEGREVLEX, Polynomial, PrimeField, parse_polynomial
from scrollhankel.resolution import graded_betti
from scrollhankel import verifier

from oracles import member_by_linear_algebra

GF = PrimeField(32003)
PAIRS = verifier.sweep_pairs(4, 4)


def all_minor_specs(top=6):
    for m in range(2, top + 1):
        for n in range(2, top + 1):
            for i in range(1, m + 1):
                for j in range(i + 1, m + 1):
                    for k in range(1, n + 1):
                        for l in range(k + 1, n + 1):
                            yield MinorSpec(m, n, (i, j), (k, l))


def test_01_pair_ideal_equals_scroll_ideal_sweep():
    t0 = time.perf_counter()
    assert len(PAIRS) == 64
    for g1, g2 in PAIRS:
        assert ideal_equal(pair_ideal(g1, g2), scroll_ideal(combine(g1, g2))), (g1, g2)
    assert time.perf_counter() - t0 <= 300


def test_02_quadratic_groebner_basis():
    for g1, g2 in PAIRS:
        scroll = scroll_ideal(combine(g1, g2))
        assert is_groebner_basis(list(scroll.generators), DEGREVLEX)
        assert {f.degree() for f in pair_ideal(g1, g2).groebner_basis(DEGREVLEX).elements} == {2}


def test_03_dimension_two():
    for g1, g2 in PAIRS:
        assert krull_dimension(pair_ideal(g1, g2)) == 2


def test_04_cohen_macaulay_small():
    count = 0
    for g1, g2 in PAIRS:
        I = pair_ideal(g1, g2)
        n = I.ring.num_vars
        if n <= 6:
            t = verifier.betti_of(I)
            assert t.depth == n - t.projective_dimension == 2 == krull_dimension(I)
            count += 1
    assert count > 0


def test_05_leading_monomial_of_minors():
    for spec in all_minor_specs():
        (i, j), (k, l) = spec.e, spec.f
        lm = hankel_minor(spec).leading_monomial(DEGREVLEX)
        expected = [0] * (spec.m + spec.n - 1)
        expected[j + k - 2] += 1
        expected[i + l - 2] += 1
        assert lm == tuple(expected), spec


def test_06_maximal_cliques_of_example():
    t0 = time.perf_counter()
    g1 = from_facets(5, [(1, 3), (2, 4), (3, 5)])
    g2 = from_facets(5, [(1, 3), (2, 5)])
    edges = {(a + c - 1, b + d - 2) for a, b in g1.edges for c, d in g2.edges}
    cliques = verifier.maximal_cliques_oracle(8, edges)
    assert [[c[0], c[-1]] for c in cliques] == [[1, 4], [2, 6], [3, 7], [4, 8]]
    assert all(c == list(range(c[0], c[-1] + 1)) for c in cliques)
    assert combine(g1, g2).facets == ((1, 4), (2, 6), (3, 7), (4, 8))
    rep = verifier.verify_prop_2_1(g1, g2)
    by_name = {c.name: c for c in rep.checks}
    assert by_name["prop2.1.cliques_from_facet_pairs"].status == verifier.PASS
    note = by_name["remark.clique_list"]
    assert note.status == verifier.FLAGGED and note.claimed[:3] == [[1, 3], [2, 6], [3, 7]]
    assert [3, 6] in [d["clique"] for d in by_name["prop2.1.non_maximal_pair_cliques"].computed]
    assert time.perf_counter() - t0 < 1


def test_07_classification_examples():
    t = graded_betti(pair_ideal(complete(2), complete(3)))
    assert t[(1, 2)] == 3 and t[(2, 3)] == 2
    assert all(j == i + 1 for (i, j), v in t.nonzero() if i >= 1)
    cr = verifier.classify(complete(2), complete(3))
    assert cr.is_prime_computed and cr.linear_resolution_computed

    I = pair_ideal(complete(2), line(3))
    meet = intersect(pair_ideal(complete(2), complete(3)), monomial_prime(I.ring, [2, 3]))
    assert I.groebner_basis() == meet.groebner_basis()
    assert verifier.classify(complete(2), line(3)).is_radical_computed is True

    cr = verifier.classify(complete(2), line(4))
    assert cr.is_radical_computed is False
    I = pair_ideal(complete(2), line(4))
    w = parse_polynomial(cr.details["non_radical_witness"], I.ring)
    assert not contains(I, w) and radical_membership(I, w)


def test_08_regularity_and_clique_count():
    t0 = time.perf_counter()
    assert graded_betti(pair_ideal(line(2), line(2))).regularity == 1
    assert graded_betti(pair_ideal(line(2), line(3))).regularity == 2
    assert graded_betti(pair_ideal(line(3), line(3))).regularity == 3
    pairs = [(a, b) for a, b in verifier.sweep_pairs(6, 6) if a.n + b.n - 1 <= 7]
    mismatches = []
    for g1, g2 in pairs:
        reg = verifier.betti_of(pair_ideal(g1, g2)).regularity
        cliques = combine(g1, g2).max_clique_count
        assert reg <= cliques
        if (reg == cliques) != (g1.is_line and g2.is_line):
            mismatches.append((g1.to_spec(), g2.to_spec(), reg, cliques))
    rep = verifier.verify_prop_2_4(line(3), line(3))
    assert {c.name: c.status for c in rep.checks}["prop2.4.printed_constant"] == verifier.FLAGGED
    assert time.perf_counter() - t0 <= 600
    assert not mismatches, f"{len(mismatches)} non-line pairs reach reg = clique count, e.g. {mismatches[:3]}"


def test_09_telescoping_identity():
    bad_sum, bad_len = [], []
    for spec in all_minor_specs():
        parts = telescoping_decomposition(spec)
        total = Polynomial.zero(hankel_minor(spec).ring)
        for h in parts:
            total = total + h.polynomial()
        if total != hankel_minor(spec):
            bad_sum.append(spec)
        (i, j), (k, l) = spec.e, spec.f
        if len(parts) != max(j - i, l - k):
            bad_len.append(spec)
    assert not bad_sum
    assert not bad_len, f"{len(bad_len)} minors have length != max(j-i, l-k), e.g. {bad_len[0]}"


def _random_poly(rng, ring, gens):
    n = ring.num_vars
    x = [Polynomial.variable(ring, v) for v in range(1, n + 1)]
    f = Polynomial.zero(ring)
    if rng.random() < 0.5:
        for g in rng.sample(gens, min(len(gens), 3)):
            f = f + g.scale(rng.randint(-3, 3)) * x[rng.randrange(n)]
            f = f + g.scale(rng.randint(-3, 3))
    if rng.random() < 0.5 or f.is_zero():
        mono = Polynomial.constant(ring, 1)
        for _ in range(rng.randint(1, 3)):
            mono = mono * x[rng.randrange(n)]
        f = f + mono.scale(rng.randint(1, 5))
    return f


def test_10_oracle_agreement():
    rng = random.Random(20261018)
    small = [(a, b) for a, b in PAIRS if a.n + b.n - 1 <= 6]
    hits = 0
    for _ in range(200):
        g1, g2 = rng.choice(small)
        I = pair_ideal(g1, g2)
        f = _random_poly(rng, I.ring, list(I.generators))
        assert f.degree() <= 3
        got = contains(I, f)
        assert got == member_by_linear_algebra(I.generators, f), (g1, g2, f)
        hits += got
    assert 0 < hits < 200

    checks = list(verifier.ALL_CHECKS)
    a = verifier.sweep(4, 4, checks).to_json(timings=False)
    b = verifier.sweep(4, 4, checks, GF).to_json(timings=False)
    assert a["summary"]["fail"] == 0
    assert a == b
