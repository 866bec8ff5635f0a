from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from scrollhankel.errors import ParseError, RingMismatch
from scrollhankel.polynomial import (
    DEGREVLEX,
    LEX,
    QQ,
    Polynomial,
    PrimeField,
    RingSpec,
    block_order,
    compare,
    normal_form,
    parse_polynomial,
    s_polynomial,
)

R3 = RingSpec(3)
R4 = RingSpec(4)
R5 = RingSpec(5)


def P(text, ring):
    return parse_polynomial(text, ring)


def degrevlex_oracle(u, v):
    if sum(u) != sum(v):
        return 1 if sum(u) > sum(v) else -1
    diff = [a - b for a, b in zip(u, v)]
    nz = [d for d in diff if d]
    if not nz:
        return 0
    return 1 if nz[-1] < 0 else -1


def test_compare_examples():
    assert compare(DEGREVLEX, (0, 2, 0), (1, 0, 1)) == 1
    assert compare(LEX, (0, 2, 0), (1, 0, 1)) == -1
    assert compare(DEGREVLEX, (1, 2, 3), (1, 2, 3)) == 0
    with pytest.raises(RingMismatch):
        compare(DEGREVLEX, (1, 0), (1, 0, 0))


def test_leading_monomial_of_a_minor():
    from scrollhankel.hankel import MinorSpec, hankel_minor
    g = hankel_minor(MinorSpec(5, 5, (1, 3), (2, 5)))
    assert g == P("x2*x7 - x4*x5", RingSpec(9))
    assert g.leading_monomial() == tuple(1 if k in (4, 5) else 0 for k in range(1, 10))


mono3 = st.tuples(*[st.integers(0, 3)] * 3)
ORDERS = [DEGREVLEX, LEX, block_order(1), block_order(2, LEX, DEGREVLEX)]


@given(mono3, mono3)
def test_degrevlex_matches_definition(u, v):
    assert compare(DEGREVLEX, u, v) == degrevlex_oracle(u, v)


@pytest.mark.parametrize("order", ORDERS, ids=str)
@given(u=mono3, v=mono3, w=mono3)
def test_order_axioms(order, u, v, w):
    c = compare(order, u, v)
    assert c == -compare(order, v, u)
    assert (c == 0) == (u == v)
    uw = tuple(a + b for a, b in zip(u, w))
    vw = tuple(a + b for a, b in zip(v, w))
    assert compare(order, uw, vw) == c
    assert compare(order, u, (0, 0, 0)) >= 0
    if c >= 0 and compare(order, v, w) >= 0:
        assert compare(order, u, w) >= 0


def test_block_order_eliminates_first_block():
    o = block_order(1)
    assert compare(o, (1, 0, 0), (0, 5, 5)) == 1


coeff = st.integers(-3, 3)
poly3 = st.dictionaries(mono3, coeff, max_size=4).map(lambda d: Polynomial(R3, d))


@settings(max_examples=60)
@given(poly3, poly3, poly3)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial.zero(R3)


def test_arbitrary_precision():
    x = Polynomial.variable(R3, 1)
    big = (x * 10**30 + 1) ** 3
    assert big.terms[(3, 0, 0)] == 10**90


def test_normal_form_single_step():
    f = P("x2^2", R3)
    assert normal_form(f, [P("x2^2 - x1*x3", R3)]) == P("x1*x3", R3)


def test_normal_form_telescoped_scroll_member():
    from scrollhankel.closed_graphs import complete, line
    from scrollhankel.hankel import scroll_ideal
    f = P("x1*x5 - x3^2", R5)
    # x1x5 - x3^2 = h_{1,4} + h_{2,3}; {1,4} is an edge of K4 but not of line[4]
    assert normal_form(f, list(scroll_ideal(complete(4)).groebner_basis().elements)).is_zero()
    assert not normal_form(f, list(scroll_ideal(line(4)).groebner_basis().elements)).is_zero()


@settings(max_examples=40)
@given(poly3)
def test_normal_form_idempotent(f):
    basis = [P("x2^2 - x1*x3", R3), P("x1*x2 - x3^2", R3)]
    r = normal_form(f, basis)
    assert normal_form(r, basis) == r
    lms = [b.leading_monomial() for b in basis]
    for m in r.terms:
        assert not any(all(a <= b for a, b in zip(lm, m)) for lm in lms)


def test_s_polynomial_examples():
    f = P("x2^2 - x1*x3", R4)
    g = P("x3^2 - x2*x4", R4)
    assert s_polynomial(f, f).is_zero()
    s = s_polynomial(f, g)
    assert s == P("x2^3*x4 - x1*x3^3", R4)
    assert normal_form(s, [f, g]).is_zero()


def test_s_polynomial_coprime_reduces():
    f = P("x1^2 - x2*x3", R3)
    g = P("x2^2 + x3^2", R3)
    lm_f, lm_g = f.leading_monomial(), g.leading_monomial()
    assert all(a == 0 or b == 0 for a, b in zip(lm_f, lm_g))
    assert normal_form(s_polynomial(f, g), [f, g]).is_zero()


@pytest.mark.parametrize("text, canon", [
    ("x1*x3 - x2^2", "x2^2 - x1*x3"),
    ("-x2^2 + x1*x3", "x2^2 - x1*x3"),
    ("2*x1 + 4*x2", "x1 + 2*x2"),
    ("1/2*x1*x2 - x3^2", "x1*x2 - 2*x3^2"),
    ("3", "1"),
])
def test_canonical_strings(text, canon):
    assert P(text, R3).to_string() == canon


def test_parse_round_trip_unnormalized():
    f = P("3*x1^2*x3 - 7/2*x2 + 5", R3)
    assert P(f.to_string(normalize=False), R3) == f
    assert f.terms[(0, 1, 0)] == Fraction(-7, 2)


@pytest.mark.parametrize("text", ["x4", "x1 +", "x1 x2", "y1", "x1**2", ""])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        P(text, R3)


def test_prime_field():
    F = PrimeField(7)
    r = RingSpec(2, F)
    f = Polynomial(r, {(1, 0): 8, (0, 1): -1})
    assert f.terms == {(1, 0): 1, (0, 1): 6}
    assert (f * 7).is_zero()
    with pytest.raises(ValueError):
        PrimeField(9)
    with pytest.raises(ValueError):
        PrimeField(2)


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        P("x1", R3) + P("x1", R4)
    with pytest.raises(RingMismatch):
        P("x1", R3) + Polynomial(RingSpec(3, PrimeField()), {(1, 0, 0): 1})
