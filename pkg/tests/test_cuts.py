from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from markov3.cuts import (
    BiWord,
    LambdaScan,
    classify_word_cut,
    cut_value,
    cylinder,
    even_blocks,
    find_bad_factor,
    find_indeterminate_cuts,
    lambda_at,
    lex_vs_exact,
    markov_cut_positions,
    periodic_cut_denominators,
    periodic_cut_value,
    prefix_cuts,
    sup_lambda,
)
from markov3.errors import HorizonTooSmall
from markov3.qfield import ContinuedFraction, QuadraticSurd, cf_value, parse_cf, surd_cmp
from markov3.spectra import markov_number_of_word
from markov3.words import AlphabetPair, digits, tree_nodes

S = QuadraticSurd.make
digit = st.integers(1, 4)


@st.composite
def cfs(draw):
    pre = tuple(draw(st.lists(digit, max_size=5)))
    per = tuple(draw(st.lists(digit, min_size=1, max_size=6)))
    return ContinuedFraction(0, pre, per)


def test_cut_value_two_sided():
    # left period (1,2) read leftward, right period (2,1)
    assert cut_value(BiWord((), (1, 2), (), (2, 1))) == S(0, 2, 1, 3)
    assert cut_value(BiWord((), (1,), (), (1,))) == S(0, 1, 1, 5)
    with pytest.raises(ValueError):
        BiWord((), (1,), (1,), ())


def test_lambda_at_example():
    x = parse_cf("[0; 3, (1)]")
    assert lambda_at(x, 1) == S(5, 1, 2, 5)
    assert lambda_at(parse_cf("[0; (1, 2)]"), 2) == S(2, 1, 1, 3)
    with pytest.raises(ValueError):
        lambda_at(x, 0)


@given(cfs(), st.integers(1, 25))
def test_scan_matches_direct_lambda(x, n):
    sc = LambdaScan(x)
    lam = lambda_at(x, n)
    assert sc.lam(n) == lam
    assert sc.lam_exceeds_3(n) == (surd_cmp(lam, QuadraticSurd.rational(3)) > 0)
    assert abs(sc.lam_f(n) - float(lam)) < 1e-9


@given(cfs())
def test_class_monotone_direction(x):
    sc = LambdaScan(x)
    for n0 in sc.class_starts():
        a, b = sc.lam(n0), sc.lam(n0 + sc.step)
        assert (surd_cmp(b, a) > 0) == sc.class_increasing(n0)


@given(cfs())
def test_sup_bounds_every_cut(x):
    r = sup_lambda(x)
    sc = LambdaScan(x)
    top = 3 * sc.scan_top + 2 * sc.step
    assert all(surd_cmp(sc.lam(n), r.value) <= 0 for n in range(1, top))
    if r.attained_at is not None:
        assert sc.lam(r.attained_at) == r.value
    else:
        assert sc.limit(r.limit_class) == r.value


def test_sup_examples():
    assert sup_lambda(parse_cf("[0; 3, (1)]")).attained_at == 1
    assert sup_lambda(parse_cf("[0; (1, 2)]")).value == S(2, 1, 1, 3)


def test_periodic_cut_values():
    D, qs = periodic_cut_denominators([2, 2, 1, 1])
    assert (D, qs) == (221, [10, 10, 14, 14])
    for i, q in enumerate(qs):
        assert periodic_cut_value([2, 2, 1, 1], i) == S(0, 2, q, D)


def test_markov_cut_positions_examples():
    assert markov_cut_positions("ab") == (S(0, 1, 5, 221), [0, 1])
    assert markov_cut_positions("a") == (S(0, 2, 1, 2), [0])
    assert markov_cut_positions("b") == (S(0, 1, 1, 5), [0])
    assert markov_cut_positions("aab")[0] == S(0, 1, 29, 7565)


def _min_period(d):
    return next(k for k in range(1, len(d) + 1) if len(d) % k == 0 and d[:k] * (len(d) // k) == d)


@given(st.text("ab", min_size=1, max_size=6))
def test_markov_value_is_max_of_cuts(w):
    d = digits(w)
    v, pos = markov_cut_positions(w)
    vals = [periodic_cut_value(d, i) for i in range(len(d))]
    assert all(surd_cmp(u, v) <= 0 for u in vals)
    assert [i for i in range(_min_period(d)) if vals[i] == v] == pos


def test_tree_words_have_two_maximal_cuts():
    for p in tree_nodes(6):
        if len(p.word) < 2:
            continue
        m = markov_number_of_word(p.word)
        v, pos = markov_cut_positions(p.word)
        assert len(pos) == 2
        assert v == S(0, 1, m, 9 * m * m - 4)


def test_cylinder():
    assert cylinder([2]) == (Fraction(1, 3), Fraction(1, 2))
    assert cylinder([2, 3]) == (Fraction(3, 7), Fraction(4, 9))


@given(st.lists(digit, min_size=1, max_size=6), st.lists(digit, min_size=1, max_size=3))
def test_cylinder_contains_continuations(prefix, per):
    lo, hi = cylinder(prefix)
    v = cf_value(ContinuedFraction(0, tuple(prefix), tuple(per)))
    assert surd_cmp(v, QuadraticSurd.rational(lo)) >= 0 and surd_cmp(v, QuadraticSurd.rational(hi)) <= 0


def test_word_cut_verdicts():
    assert classify_word_cut("ab", "aa", "b_a").kind == "bad"
    assert classify_word_cut("aa", "ab", "b_a").kind == "good"
    assert classify_word_cut("ab", "ab", "a_b").kind == "indeterminate"


def test_bad_factor():
    assert find_bad_factor("aabb") == (2, "")
    assert find_bad_factor("abab") is None
    assert find_bad_factor("baab") is None


def test_even_blocks():
    r = even_blocks([1, 1, 2, 2, 1, 1, 1, 1])
    assert r.ok and r.blocks == ((1, 2), (2, 2), (1, 4))
    r = even_blocks([2, 1, 1, 2, 2])
    assert r.ok and r.leading_odd
    r = even_blocks([1, 2, 1])
    assert not r.ok and r.failure_at == 0


def _sites(context, pair):
    return [(s.position, s.form, "".join(map(str, s.theta)), s.rest_start)
            for s in find_indeterminate_cuts(context, pair, 12)]


def test_indeterminate_sites():
    u, v = AlphabetPair("ab", "b", ("U",)), AlphabetPair("a", "ab", ("V",))
    assert _sites("alpha_beta_power_right", u) == [(2, "mirror", "", 4)]
    assert _sites("alphabeta_periodic_left", u) == [(6, "mirror", "11", 8)]
    assert _sites("alpha_beta_power_right", v) == [(2, "leading", "", 1), (4, "mirror", "22", 8)]
    assert _sites("alphabeta_periodic_left", v) == [(4, "mirror", "", 4)]
    with pytest.raises(HorizonTooSmall):
        find_indeterminate_cuts("alpha_beta_power_right", u, 2)


def test_prefix_cuts():
    assert [c.verdict for c in prefix_cuts([1, 1, 2, 2])] == ["good", "good", "good", "indeterminate"]


def test_lex_criterion_small_periods():
    from itertools import product

    for n in range(1, 5):
        for t in product("ab", repeat=n):
            assert lex_vs_exact("".join(t)) == []
