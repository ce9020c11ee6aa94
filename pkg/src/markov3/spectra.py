"""Markov triples, Markov forms and their roots, points of the spectra below 3,
and exact evaluation of the tilde-m value of eventually periodic numbers."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .cuts import SupResult, lambda_at, markov_value_periodic, sup_lambda
from .errors import MismatchedPair, NotMarkovNumber
from .qfield import (
    ContinuedFraction,
    QuadraticSurd,
    cf_value,
    surd_cmp,
    surd_to_cf,
    word_matrix,
)
from .words import AlphabetPair, Word, digits, transpose, tree_nodes, with_first

THREE = QuadraticSurd.rational(3)


# ---------------------------------------------------------------------------
# triples


@dataclass(frozen=True)
class MarkovTriple:
    x: int
    y: int
    z: int
    path: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not (0 < self.x <= self.y <= self.z):
            raise ValueError(f"triple must satisfy 0 < x <= y <= z: {self.x, self.y, self.z}")
        if self.x**2 + self.y**2 + self.z**2 != 3 * self.x * self.y * self.z:
            raise ValueError(f"{self.x, self.y, self.z} is not a Markov triple")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


def _branch(t: MarkovTriple) -> list[MarkovTriple]:
    x, y, z = t.as_tuple()
    out = []
    for side, (u, v, w) in (("left", (x, z, 3 * x * z - y)), ("right", (y, z, 3 * y * z - x))):
        s = sorted((u, v, w))
        out.append(MarkovTriple(*s, path=t.path + (side,)))
    return out


def enum_triples(bound: int) -> list[MarkovTriple]:
    """All normalized Markov triples with largest entry <= bound."""
    if bound < 1:
        return []
    found = [MarkovTriple(1, 1, 1)]
    if bound >= 2:
        found.append(MarkovTriple(1, 1, 2, ("left",)))
    queue = deque()
    if bound >= 5:
        queue.append(MarkovTriple(1, 2, 5, ("left", "left")))
    while queue:
        t = queue.popleft()
        found.append(t)
        for c in _branch(t):
            if c.z <= bound:
                queue.append(c)
    found.sort(key=lambda t: (t.z, t.x, t.y))
    return found


@lru_cache(maxsize=64)
def markov_numbers(bound: int) -> frozenset[int]:
    return frozenset(t.z for t in enum_triples(bound))


def is_markov_number(m: int) -> bool:
    return m >= 1 and m in markov_numbers(max(m, 1))


# ---------------------------------------------------------------------------
# forms and roots


@dataclass(frozen=True)
class MarkovForm:
    """m F(X, Y) = m X^2 + (3m - 2k) XY + (l - 3k) Y^2 with k^2 + 1 = l m."""

    m: int
    k: int
    l: int

    def __post_init__(self):
        if self.k * self.k + 1 != self.l * self.m:
            raise ValueError(f"k^2 + 1 != l m for {self}")

    @property
    def coefficients(self) -> tuple[int, int, int]:
        """Integer coefficients of m F."""
        return (self.m, 3 * self.m - 2 * self.k, self.l - 3 * self.k)

    def __str__(self) -> str:
        A, B, C = self.coefficients
        return f"{A}X^2 {'+' if B >= 0 else '-'} {abs(B)}XY {'+' if C >= 0 else '-'} {abs(C)}Y^2"


def form_from_triple(t: MarkovTriple) -> MarkovForm:
    m = t.z
    if m == 1:
        return MarkovForm(1, 0, 1)
    k = t.y * pow(t.x, -1, m) % m
    k = min(k, m - k)
    return MarkovForm(m, k, (k * k + 1) // m)


def _delta(m: int) -> QuadraticSurd:
    # (3 + sqrt(9 - 4/m^2))/2
    return (THREE + QuadraticSurd.sqrt(Fraction(9) - Fraction(4, m * m))) / 2


def roots(f: MarkovForm) -> tuple[QuadraticSurd, QuadraticSurd]:
    """(theta, Theta) with m F = m (X - theta Y)(X - Theta Y).

    For m = 1 the small root is (sqrt 5 - 3)/2, which is negative.
    """
    d = _delta(f.m)
    km = Fraction(f.k, f.m)
    return d + (km - 3), km - d


def markov_number_of_word(w: Word) -> int:
    """Lower-left entry of the matrix of the digit expansion of w."""
    return word_matrix(digits(w)).q


@dataclass(frozen=True)
class RootExpansions:
    theta: ContinuedFraction
    Theta_plus_3: ContinuedFraction

    @property
    def Theta(self) -> QuadraticSurd:
        return cf_value(self.Theta_plus_3) - 3


def _word_of(pair_or_word) -> Word:
    if isinstance(pair_or_word, AlphabetPair):
        return pair_or_word.word
    return pair_or_word


def root_cf(f: MarkovForm, pair_or_word) -> RootExpansions:
    """Continued fractions of theta and Theta + 3 read off the Christoffel
    word w = alpha beta of the form, checked against :func:`roots`."""
    w = _word_of(pair_or_word)
    if markov_number_of_word(w) != f.m:
        raise MismatchedPair(f"word {w!r} has Markov number {markov_number_of_word(w)}, not {f.m}")
    th, Th = roots(f)
    if len(w) < 2:
        # the words b (m = 1) and a (m = 2) have no inner palindrome
        out = RootExpansions(surd_to_cf(th) if th > 0 else surd_to_cf(th + 1), surd_to_cf(Th + 3))
    else:
        per_theta = tuple(digits(w[1:] + "a"))
        per_Theta = tuple(digits(w[1:-1] + "ab"))
        out = RootExpansions(ContinuedFraction(0, (2,), per_theta), ContinuedFraction(0, (2,), per_Theta))
        if cf_value(out.theta) != th or cf_value(out.Theta_plus_3) != Th + 3:
            raise MismatchedPair(f"word {w!r} does not give the roots of {f}")
    return out


def pair_for_markov(m: int) -> AlphabetPair | Word:
    """A Christoffel word (tree node, or a letter for m = 1, 2) with Markov number m."""
    if m == 1:
        return "b"
    if m == 2:
        return "a"
    frontier = [AlphabetPair.root()]
    while frontier:
        nxt = []
        for p in frontier:
            q = markov_number_of_word(p.word)
            if q == m:
                return p
            if q < m:
                nxt.extend(p.children())
        frontier = nxt
    raise NotMarkovNumber(f"{m} is not a Markov number")


def triple_of_node(p: AlphabetPair) -> tuple[int, int, int]:
    return tuple(sorted((markov_number_of_word(p.alpha), markov_number_of_word(p.beta), markov_number_of_word(p.word))))


# ---------------------------------------------------------------------------
# spectrum points


def _check_markov(m: int, validate: bool) -> None:
    if validate and not is_markov_number(m):
        raise NotMarkovNumber(f"{m} is not a Markov number")


def lagrange_point(m: int, validate: bool = True) -> QuadraticSurd:
    """sqrt(9 - 4/m^2)."""
    _check_markov(m, validate)
    return QuadraticSurd.sqrt(Fraction(9) - Fraction(4, m * m))


def tilde_point(m: int, validate: bool = True) -> QuadraticSurd:
    """(3 + sqrt(9 - 4/m^2))/2."""
    return (THREE + lagrange_point(m, validate)) / 2


def tilde_m(x: ContinuedFraction) -> SupResult:
    """sup over n >= 1 of lambda_n(x), exactly."""
    return sup_lambda(x)


# ---------------------------------------------------------------------------
# equal value check


@dataclass
class EqualValueReport:
    u: Word
    v: Word
    m: int
    expected: QuadraticSurd
    values: dict[str, QuadraticSurd]
    position_checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(val == self.expected for val in self.values.values()) and all(self.position_checks.values())

    def as_dict(self) -> dict:
        return {
            "u": self.u,
            "v": self.v,
            "m": self.m,
            "expected": str(self.expected),
            "values": {k: str(v) for k, v in self.values.items()},
            "position_checks": self.position_checks,
            "ok": self.ok,
        }


def _cf(pre: list[int], per: list[int]) -> ContinuedFraction:
    return ContinuedFraction(0, tuple(pre), tuple(per))


def verify_equal_value(u: Word, v: Optional[Word] = None) -> EqualValueReport:
    """Check that the four expansions built from (u, v) share the tilde-m value
    (3 + m(uv))/2, and that the maximum sits where expected.

    With v omitted, u must be a single letter and the two exceptional
    expansions for that letter are checked instead.
    """
    if v is None:
        if u == "b":
            tails = {"b^inf": ([], [1]), "2b^inf": ([2], [1])}
            m = 1
        elif u == "a":
            tails = {"a^inf": ([], [2]), "ba^inf": ([1, 1], [2])}
            m = 2
        else:
            raise ValueError("a single word must be 'a' or 'b'")
        expected = tilde_point(m)
        values = {name: tilde_m(_cf(*t)).value for name, t in tails.items()}
        return EqualValueReport(u, "", m, expected, values, {})

    uv = u + v
    m = markov_number_of_word(uv)
    expected = (THREE + markov_value_periodic(uv)) / 2
    duv = digits(uv)
    up = digits(u[1:])
    tails = {
        "((uv)^T)^inf": ([], digits(transpose(uv))),
        "v^T((uv)^T)^inf": (digits(transpose(v)), digits(transpose(uv))),
        "2u^+(uv)^inf": ([2] + up, duv),
        "2u^+v(uv)^inf": ([2] + up + digits(v), duv),
    }
    values = {name: tilde_m(_cf(*t)).value for name, t in tails.items()}

    # the maximum is reached right after the first block of length |uv|
    n = len(duv) + 1
    theta = duv[2:-2]
    per_atb = tuple(duv)
    conj1 = cf_value(ContinuedFraction(per_atb[0], (), per_atb[1:] + per_atb[:1])) + cf_value(
        ContinuedFraction(0, tuple([1, 1] + theta + [1, 1]), ())
    )
    bta = tuple([1, 1] + theta + [2, 2])
    conj2 = cf_value(ContinuedFraction(0, (), bta)) + cf_value(ContinuedFraction(2, tuple([2] + theta + [1, 1]), ()))
    x1 = _cf(*tails["v^T((uv)^T)^inf"])
    x2 = _cf(*tails["((uv)^T)^inf"])
    checks = {
        "u^b v (uv)^inf = v^T((uv)^T)^inf": x1.digits(4 * n) == _cf(digits(with_first(u, "b") + v), duv).digits(4 * n),
        "conj1": lambda_at(x1, n) == conj1 == values["v^T((uv)^T)^inf"],
        # here the integer digit sits left of the cut, so the index is n - 1
        "conj2": lambda_at(x2, n - 1) == conj2 == values["((uv)^T)^inf"],
    }
    return EqualValueReport(u, v, m, expected, values, checks)


# ---------------------------------------------------------------------------
# roots and tilde-m below 3


@dataclass(frozen=True)
class RootMatch:
    m: int
    k: int
    kind: str  # theta, 1-theta, Theta+3, -2-Theta


@dataclass
class FlorekReport:
    below_three: bool
    tilde: QuadraticSurd
    match: Optional[RootMatch]
    m_bound: int

    @property
    def consistent(self) -> bool:
        return self.below_three == (self.match is not None)

    def __bool__(self) -> bool:
        return self.below_three


def _fractional_part(s: QuadraticSurd) -> QuadraticSurd:
    return s - math.floor(s)


def root_match(x: ContinuedFraction, m_bound: int) -> Optional[RootMatch]:
    """Whether x is k +- theta or k +- Theta for a Markov form with m <= m_bound."""
    y = _fractional_part(cf_value(x))
    if y.is_rational:
        return None
    for t in enum_triples(m_bound):
        f = form_from_triple(t)
        th, Th = roots(f)
        for kind, r in (("theta", th), ("1-theta", 1 - th), ("Theta+3", Th + 3), ("-2-Theta", -2 - Th)):
            if _fractional_part(r) == y:
                return RootMatch(f.m, f.k, kind)
    return None


def florek_harcos_check(x: ContinuedFraction, m_bound: int = 1000) -> FlorekReport:
    """tilde-m(x) < 3, cross-checked against membership of x in the integer
    translates of the roots of Markov forms with m <= m_bound.  When the
    value is below 3 the Markov number is recovered from it and its forms are
    searched even beyond m_bound."""
    t = tilde_m(x).value
    below = surd_cmp(t, THREE) < 0
    bound = m_bound
    if below:
        mu = 2 * t - 3
        m2 = Fraction(4) / (9 - (mu * mu).to_fraction())
        if m2.denominator == 1 and math.isqrt(m2.numerator) ** 2 == m2.numerator:
            bound = max(bound, math.isqrt(m2.numerator))
    return FlorekReport(below, t, root_match(x, bound), m_bound)
