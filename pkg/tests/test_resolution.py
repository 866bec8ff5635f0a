from math import comb

import pytest

from scrollhankel.closed_graphs import complete, enumerate_connected_closed, line
from scrollhankel.errors import CapExceeded, IncompleteTable
from scrollhankel.groebner import Ideal, initial_ideal
from scrollhankel.hankel import pair_ideal, scroll_ideal
from scrollhankel.polynomial import PrimeField, RingSpec, parse_polynomial
from scrollhankel.resolution import KoszulComplex, graded_betti, standard_monomials


def ideal(n, *texts, field=None):
    r = RingSpec(n) if field is None else RingSpec(n, field)
    return Ideal(r, [parse_polynomial(t, r) for t in texts])


def hilbert(I, d):
    return len(standard_monomials(initial_ideal(I.groebner_basis()), d))


def test_standard_monomial_counts():
    I = pair_ideal(complete(2), complete(3))
    assert [hilbert(I, d) for d in range(4)] == [1, 4, 7, 10]
    assert hilbert(ideal(3, "x2^2"), 2) == 5


def test_k2_k3_linear():
    t = graded_betti(pair_ideal(complete(2), complete(3)))
    assert t.nonzero() == [((0, 0), 1), ((1, 2), 3), ((2, 3), 2)]
    assert t.has_linear_resolution()
    assert t.regularity == 1 and t.projective_dimension == 2 and t.depth == 2


def test_k2_l3():
    t = graded_betti(pair_ideal(complete(2), line(3)))
    assert t.nonzero() == [((0, 0), 1), ((1, 2), 2), ((2, 4), 1)]
    assert not t.has_linear_resolution()
    assert t.regularity == 2


def test_eagon_northcott_k4_k4():
    t = graded_betti(pair_ideal(complete(4), complete(4)))
    assert [t[(i, i + 1)] for i in range(1, 6)] == [15, 40, 45, 24, 5]
    assert t.regularity == 1


def test_line_pair_regularities():
    assert graded_betti(pair_ideal(line(2), line(2))).regularity == 1
    assert graded_betti(pair_ideal(line(2), line(3))).regularity == 2
    assert graded_betti(pair_ideal(line(3), line(3))).regularity == 3


def test_complete_intersection():
    for c in range(1, 4):
        gens = [f"x{v}^2" for v in range(1, c + 1)]
        t = graded_betti(ideal(4, *gens))
        assert t.nonzero() == [((i, 2 * i), comb(c, i)) for i in range(c + 1)]


def _hilbert_numerator(I, top):
    n = I.ring.num_vars
    h = [hilbert(I, d) for d in range(top + 1)]
    # multiply the Hilbert series by (1 - t)^n
    return [sum((-1) ** k * comb(n, k) * h[j - k] for k in range(min(n, j) + 1)) for j in range(top + 1)]


@pytest.mark.parametrize("g1, g2", [(line(3), line(3)), (complete(3), line(3)), (line(2), line(4))])
def test_euler_characteristic_matches_hilbert_series(g1, g2):
    I = pair_ideal(g1, g2)
    t = graded_betti(I)
    top = max(j for (_, j), _ in t.nonzero()) + 2
    alt = [sum((-1) ** i * t[(i, j)] for i in range(I.ring.num_vars + 1)) for j in range(top + 1)]
    assert alt == _hilbert_numerator(I, top)


def test_first_betti_is_minimal_generator_count():
    for g in enumerate_connected_closed(4):
        I = scroll_ideal(g)
        t = graded_betti(I)
        assert t[(1, 2)] == len(I.groebner_basis())
        assert t[(0, 0)] == 1


def test_differential_squares_to_zero():
    kc = KoszulComplex(pair_ideal(line(3), line(3)))
    field = kc.field
    for i in range(2, 4):
        for j in range(i, i + 3):
            for w in kc.weights(i, j):
                lower = kc.differential_vectors(i - 1, j, w)
                for vec in kc.differential_vectors(i, j, w):
                    out = {}
                    for k, c in vec.items():
                        for k2, c2 in lower[k].items():
                            out[k2] = field.normalize(out.get(k2, 0) + c * c2)
                    assert not any(out.values())


def test_rational_and_prime_field_agree():
    gf = PrimeField(32003)
    for g1 in enumerate_connected_closed(3):
        for g2 in enumerate_connected_closed(3):
            a = graded_betti(pair_ideal(g1, g2))
            b = graded_betti(pair_ideal(g1, g2, gf))
            assert a.nonzero() == b.nonzero()


def test_incomplete_table():
    t = graded_betti(pair_ideal(line(3), line(3)), max_degree=2)
    assert not t.complete
    with pytest.raises(IncompleteTable):
        t.regularity


def test_cap():
    with pytest.raises(CapExceeded):
        graded_betti(pair_ideal(complete(5), complete(6)))
    assert graded_betti(ideal(3, "x1"), max_vars=3).nonzero() == [((0, 0), 1), ((1, 1), 1)]


def test_text_table():
    text = graded_betti(pair_ideal(complete(2), line(3))).to_text()
    assert text.splitlines() == [
        "       0 1 2",
        "total: 1 2 1",
        "    0: 1 . .",
        "    1: . 2 .",
        "    2: . . 1",
    ]
