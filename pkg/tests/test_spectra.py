import pytest
from hypothesis import given, strategies as st

from markov3.errors import MismatchedPair, NotMarkovNumber
from markov3.qfield import ContinuedFraction, QuadraticSurd, cf_value, parse_cf, surd_to_cf
from markov3.spectra import (
    MarkovForm,
    MarkovTriple,
    enum_triples,
    florek_harcos_check,
    form_from_triple,
    is_markov_number,
    lagrange_point,
    markov_number_of_word,
    markov_numbers,
    pair_for_markov,
    root_cf,
    roots,
    tilde_m,
    tilde_point,
    triple_of_node,
    verify_equal_value,
)
from markov3.words import AlphabetPair, tree_nodes

S = QuadraticSurd.make
paths = st.lists(st.sampled_from("UV"), max_size=7).map(tuple)


def test_triples_small():
    got = [t.as_tuple() for t in enum_triples(34)]
    assert got == [(1, 1, 1), (1, 1, 2), (1, 2, 5), (1, 5, 13), (2, 5, 29), (1, 13, 34)]
    with pytest.raises(ValueError):
        MarkovTriple(1, 2, 3)


def test_markov_numbers_below_1000():
    assert sorted(markov_numbers(1000)) == [1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985]
    assert is_markov_number(433) and not is_markov_number(100)


def test_triples_match_brute_force_solutions():
    # every solution of the Markov equation with entries <= 200, sorted
    brute = {
        (x, y, z)
        for z in range(1, 201)
        for y in range(1, z + 1)
        for x in range(1, y + 1)
        if x * x + y * y + z * z == 3 * x * y * z
    }
    assert {t.as_tuple() for t in enum_triples(200)} == brute


def test_forms():
    f = form_from_triple(MarkovTriple(1, 2, 5))
    assert (f.m, f.k, f.l) == (5, 2, 1)
    assert f.coefficients == (5, 11, -5)
    f = form_from_triple(MarkovTriple(2, 5, 29))
    assert (f.k, f.l, f.coefficients) == (12, 5, (29, 63, -31))
    with pytest.raises(ValueError):
        MarkovForm(5, 3, 1)


@pytest.mark.parametrize("t", enum_triples(1000))
def test_roots_solve_form(t):
    f = form_from_triple(t)
    A, B, C = f.coefficients
    for r in roots(f):
        assert A * r * r + B * r + C == 0


def test_roots_examples():
    f = form_from_triple(MarkovTriple(1, 2, 5))
    assert roots(f) == (S(-11, 1, 10, 221), S(-11, -1, 10, 221))
    th, _ = roots(form_from_triple(MarkovTriple(1, 1, 1)))
    assert th == S(-3, 1, 2, 5) and th < 0


def test_root_cf():
    f = form_from_triple(MarkovTriple(1, 2, 5))
    rc = root_cf(f, pair_for_markov(5))
    assert rc.theta == ContinuedFraction(0, (2,), (1, 1, 2, 2))
    assert rc.Theta_plus_3 == ContinuedFraction(0, (2,), (2, 2, 1, 1))
    assert rc.Theta == roots(f)[1]
    assert root_cf(form_from_triple(MarkovTriple(1, 1, 2)), "a").theta == ContinuedFraction(0, (), (2,))
    with pytest.raises(MismatchedPair):
        root_cf(f, "abb")


def test_pair_for_markov():
    assert pair_for_markov(1) == "b" and pair_for_markov(2) == "a"
    assert pair_for_markov(5).word == "ab"
    assert markov_number_of_word(pair_for_markov(433).word) == 433
    with pytest.raises(NotMarkovNumber):
        pair_for_markov(6)


def test_word_markov_numbers():
    assert [markov_number_of_word(w) for w in ("b", "a", "ab", "abb", "aab", "aabab")] == [1, 2, 5, 13, 29, 433]


@given(paths)
def test_node_gives_markov_triple(path):
    x, y, z = triple_of_node(AlphabetPair.from_path(path))
    MarkovTriple(x, y, z)


def test_spectrum_points():
    assert [lagrange_point(m) for m in (1, 2, 5)] == [S(0, 1, 1, 5), S(0, 2, 1, 2), S(0, 1, 5, 221)]
    assert [tilde_point(m) for m in (1, 2, 5)] == [S(3, 1, 2, 5), S(3, 2, 2, 2), S(15, 1, 10, 221)]
    with pytest.raises(NotMarkovNumber):
        lagrange_point(6)


def test_tilde_m_fixtures():
    assert tilde_m(parse_cf("[0; (1)]")).value == S(3, 1, 2, 5)
    assert tilde_m(parse_cf("[0; (2)]")).value == S(3, 2, 2, 2)
    two_minus_root2 = surd_to_cf(2 - S(0, 1, 1, 2))
    assert two_minus_root2 == ContinuedFraction(0, (1, 1), (2,))
    assert tilde_m(two_minus_root2).value == S(3, 2, 2, 2)
    assert tilde_m(parse_cf("[0; (1, 2)]")).value == S(2, 1, 1, 3)


def test_equal_value_examples():
    r = verify_equal_value("ab", "b")
    assert r.ok and r.m == 13 and r.expected == S(39, 1, 26, 1517)
    r = verify_equal_value("a", "ab")
    assert r.ok and r.m == 29 and r.expected == S(87, 1, 58, 7565)
    r = verify_equal_value("a", "b")
    assert r.ok and r.expected == S(15, 1, 10, 221)
    assert verify_equal_value("a").ok and verify_equal_value("b").ok
    with pytest.raises(ValueError):
        verify_equal_value("ab")


def test_equal_value_small_tree():
    for p in tree_nodes(5):
        r = verify_equal_value(p.alpha, p.beta)
        assert r.ok, p.path
        assert r.expected == tilde_point(r.m, validate=False)


def test_florek_examples():
    r = florek_harcos_check(parse_cf("[0; (2)]"))
    assert r and r.consistent and (r.match.m, r.match.kind) == (2, "theta")
    r = florek_harcos_check(parse_cf("[0; 1, 1, (2)]"))
    assert r and r.match.kind == "1-theta"
    r = florek_harcos_check(parse_cf("[0; (1, 2)]"))
    assert not r and r.consistent


def test_florek_on_tree_roots():
    for p in tree_nodes(4):
        f = form_from_triple(MarkovTriple(*triple_of_node(p)))
        x = root_cf(f, p).theta
        assert cf_value(x) == roots(f)[0]
        r = florek_harcos_check(x, 10)
        assert r and r.consistent and r.match.m == f.m
