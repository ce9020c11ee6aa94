from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from markov3.errors import EmptyWord, ParseError
from markov3.qfield import (
    ContinuedFraction,
    QuadraticSurd,
    SurdSum,
    add_values,
    cf_value,
    convergent_pairs,
    convergents,
    galois_conjugate,
    parse_cf,
    parse_surd,
    purely_periodic_value,
    rational_to_cf,
    surd_cmp,
    surd_to_cf,
    word_matrix,
)

S = QuadraticSurd.make
digit = st.integers(1, 4)
pre_s = st.lists(digit, max_size=5)
per_s = st.lists(digit, min_size=1, max_size=6)


@st.composite
def cfs(draw, x0=st.integers(-3, 3)):
    return ContinuedFraction(draw(x0), tuple(draw(pre_s)), tuple(draw(per_s)))


# -- surds ----------------------------------------------------------------------


def test_canonical_surd_form():
    s = S(2, 2, 4, 8)  # (2 + 2*sqrt 8)/4 = (1 + 2 sqrt 2)/2
    assert (s.a, s.b, s.c, s.d) == (1, 2, 2, 2)
    assert S(3, 5, 1, 9) == 18
    assert S(1, -1, -2, 5) == S(-1, 1, 2, 5)
    assert str(S(-1, 1, 2, 5)) == "(-1 + 1*sqrt(5))/2"


def test_surd_cmp_examples():
    assert surd_cmp(S(3, 1, 2, 5), QuadraticSurd.rational(3)) < 0
    assert surd_cmp(S(0, 1, 5, 221), QuadraticSurd.rational(3)) < 0
    assert surd_cmp(S(1, 1, 1, 2), S(1, 1, 1, 2)) == 0


def test_surd_arithmetic():
    phi = S(1, 1, 2, 5)
    assert phi * phi == phi + 1
    assert phi.reciprocal() == phi - 1
    assert S(0, 1, 1, 2) * S(0, 1, 1, 2) == 2


def test_parse_surd_round_trip():
    for s in (S(7, 3, 10, 221), S(-1, -2, 3, 2), QuadraticSurd.rational(Fraction(5, 7))):
        assert parse_surd(str(s)) == s
    with pytest.raises(ParseError):
        parse_surd("sqrt(2)")


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 30), st.integers(2, 60),
       st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 30))
def test_surd_cmp_matches_high_precision(a, b, c, d, a2, b2, c2):
    from decimal import Decimal, getcontext

    getcontext().prec = 60
    s, t = S(a, b, c, d), S(a2, b2, c2, d)
    diff = (Decimal(a) + Decimal(b) * Decimal(d).sqrt()) / c - (Decimal(a2) + Decimal(b2) * Decimal(d).sqrt()) / c2
    expected = 0 if abs(diff) < Decimal(10) ** -40 else (1 if diff > 0 else -1)
    assert surd_cmp(s, t) == expected


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_surd_cmp_on_rationals(p, q):
    got = surd_cmp(QuadraticSurd.rational(p), QuadraticSurd.rational(q))
    assert got == (p > q) - (p < q)


def test_galois_conjugate():
    assert galois_conjugate(S(1, 1, 2, 5)) == S(1, -1, 2, 5)
    assert galois_conjugate(QuadraticSurd.rational(Fraction(7, 3))) == Fraction(7, 3)
    g = purely_periodic_value([2, 2, 1, 1])
    assert -1 / galois_conjugate(g) == purely_periodic_value([1, 1, 2, 2])


def test_sum_of_different_fields():
    v = add_values(S(0, 1, 1, 2), S(0, 1, 1, 3))
    assert isinstance(v, SurdSum)
    assert v > QuadraticSurd.rational(3) and v < QuadraticSurd.rational(Fraction(32, 10))
    assert add_values(S(1, 1, 1, 2), S(1, -1, 1, 2)) == 2


# -- matrices and periodic values -------------------------------------------------


def test_word_matrix():
    m = word_matrix([2, 2, 1, 1])
    assert (m.p, m.pp, m.q, m.qp) == (12, 7, 5, 3)
    m = word_matrix([1])
    assert (m.p, m.pp, m.q, m.qp) == (1, 1, 1, 0)
    m = word_matrix([1, 1])
    assert (m.p, m.pp, m.q, m.qp) == (2, 1, 1, 1)
    with pytest.raises(EmptyWord):
        word_matrix([])


def test_purely_periodic_values():
    assert purely_periodic_value([1]) == S(1, 1, 2, 5)
    assert purely_periodic_value([2]) == S(1, 1, 1, 2)
    # fixed point of x = [2; 2, 1, 1, x]
    assert purely_periodic_value([2, 2, 1, 1]) == S(9, 1, 10, 221)


@given(st.lists(digit, min_size=1, max_size=8))
def test_galois_reversed_period(w):
    g = purely_periodic_value(w)
    assert -1 / galois_conjugate(g) == purely_periodic_value(list(reversed(w)))


def test_cf_value_examples():
    assert cf_value(ContinuedFraction(0, (), (1,))) == S(-1, 1, 2, 5)
    assert cf_value(ContinuedFraction(0, (3,), (1,))) == 1 / (3 + S(-1, 1, 2, 5))
    assert cf_value(ContinuedFraction(5)) == 5


def test_surd_to_cf_examples():
    assert surd_to_cf(S(-1, 1, 1, 2)) == ContinuedFraction(0, (), (2,))
    assert surd_to_cf(S(3, 1, 2, 5)) == ContinuedFraction(2, (), (1,))
    assert surd_to_cf(QuadraticSurd.rational(Fraction(7, 3))) == ContinuedFraction(2, (3,), ())


@given(cfs())
def test_cf_round_trip(x):
    assert surd_to_cf(cf_value(x)) == x.canonical()


@given(st.fractions(max_denominator=1000))
def test_rational_round_trip(q):
    assert cf_value(rational_to_cf(q)) == q


def test_canonical_form():
    x = ContinuedFraction(0, (1, 2, 1, 2), (1, 2, 1, 2))
    assert x.canonical() == ContinuedFraction(0, (), (1, 2))
    assert ContinuedFraction(0, (2, 1), ()).canonical() == ContinuedFraction(0, (3,), ())


# -- convergents ---------------------------------------------------------------------


def test_convergents_examples():
    F = Fraction
    assert convergents(ContinuedFraction(0, (), (1,)), 5) == [F(0), F(1), F(1, 2), F(2, 3), F(3, 5)]
    assert convergents(ContinuedFraction(0, (), (2,)), 3) == [F(0), F(1, 2), F(2, 5)]
    assert convergents(ContinuedFraction(3, (7,), ()), 2) == [F(3), F(22, 7)]
    assert len(convergents(ContinuedFraction(3, (7,), ()), 5)) == 2


@given(cfs())
def test_convergent_determinant(x):
    pairs = convergent_pairs(x, 12)
    for k in range(1, len(pairs)):
        (p0, q0), (p1, q1) = pairs[k - 1], pairs[k]
        assert q1 * p0 - p1 * q0 == (-1) ** k
        assert q1 > q0 or k == 1


@given(cfs(x0=st.just(0)), st.integers(0, 11))
def test_error_formula(x, n):
    from markov3.cuts import lambda_at

    p, q = convergent_pairs(x, n + 1)[-1]
    assert cf_value(x) - Fraction(p, q) == Fraction((-1) ** n, q * q) / lambda_at(x, n + 1)


# -- parsing ----------------------------------------------------------------------------


@given(cfs())
def test_cf_literal_round_trip(x):
    assert parse_cf(str(x)) == x.canonical()


def test_parse_cf_forms():
    assert parse_cf("[0; 3, (1)]") == ContinuedFraction(0, (3,), (1,))
    assert parse_cf(" [ 2 ;(1 , 2) ] ") == ContinuedFraction(2, (), (1, 2))
    assert parse_cf("[5]") == ContinuedFraction(5)


@pytest.mark.parametrize("bad", ["[0; 1, 2", "0; 1]", "[0; 0, (1)]", "[0; (1), 2]", "[0; a]", "[0; ()]"])
def test_parse_cf_rejects(bad):
    with pytest.raises(ParseError) as e:
        parse_cf(bad)
    assert e.value.position >= 0
